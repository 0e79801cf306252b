/* cuttrace: XAG optimization with cut tracing
 * Copyright (C) 2025-2026  EPFL
 *
 * Permission is hereby granted, free of charge, to any person
 * obtaining a copy of this software and associated documentation
 * files (the "Software"), to deal in the Software without
 * restriction, including without limitation the rights to use,
 * copy, modify, merge, publish, distribute, sublicense, and/or sell
 * copies of the Software, and to permit persons to whom the
 * Software is furnished to do so, subject to the following
 * conditions:
 *
 * The above copyright notice and this permission notice shall be
 * included in all copies or substantial portions of the Software.
 *
 * THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
 * EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
 * OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
 * NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
 * HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
 * WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
 * FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
 * OTHER DEALINGS IN THE SOFTWARE.
 */

/*!
  \file io.hpp
  \brief Reading and writing of XAG netlists

  The canonical interchange format is a line-based text format:

    line := "inputs" name+ | "outputs" name+ | name "=" expr
    expr := "AND" lit lit | "XOR" lit lit | lit | "0"
    lit  := ["!"] name

  Statements are separated by newlines or semicolons; "#" starts a
  comment.  The name "0" is reserved for the constant-zero signal.
  A small BLIF subset (".model", ".inputs", ".outputs", ".names" with
  at most two inputs, ".end") supports external benchmark import.
*/

#pragma once

#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "xag.hpp"

namespace cuttrace
{

struct parse_error : public std::runtime_error
{
  parse_error( uint32_t line, std::string const& what )
      : std::runtime_error( "line " + std::to_string( line ) + ": " + what ), line_number( line )
  {
  }
  uint32_t line_number;
};

namespace detail
{

inline std::vector<std::string> tokenize( std::string const& s )
{
  std::vector<std::string> tokens;
  std::istringstream in( s );
  std::string tok;
  while ( in >> tok )
  {
    tokens.push_back( tok );
  }
  return tokens;
}

/* splits a document into (line_number, statement) pairs; ';' also separates */
inline std::vector<std::pair<uint32_t, std::string>> statements( std::string const& text )
{
  std::vector<std::pair<uint32_t, std::string>> result;
  uint32_t line_no = 1;
  std::string current;
  auto flush = [&]() {
    if ( current.find_first_not_of( " \t\r" ) != std::string::npos )
    {
      result.emplace_back( line_no, current );
    }
    current.clear();
  };
  bool in_comment = false;
  for ( char const c : text )
  {
    if ( c == '\n' )
    {
      flush();
      in_comment = false;
      ++line_no;
    }
    else if ( in_comment )
    {
      continue;
    }
    else if ( c == '#' )
    {
      in_comment = true;
    }
    else if ( c == ';' )
    {
      flush();
    }
    else
    {
      current += c;
    }
  }
  flush();
  return result;
}

} // namespace detail

/*! \brief Parses the XAG text format. */
inline xag_network parse_xag_text( std::string const& text )
{
  xag_network net;
  std::map<std::string, signal> env;
  std::vector<std::string> output_order;
  std::set<std::string> output_names;
  bool seen_inputs = false;
  bool seen_outputs = false;

  auto resolve_lit = [&]( uint32_t line, std::string const& lit ) -> signal {
    bool phase = false;
    std::string name = lit;
    if ( !name.empty() && name.front() == '!' )
    {
      phase = true;
      name = name.substr( 1 );
    }
    if ( name == "0" )
    {
      return net.get_constant( phase );
    }
    auto const it = env.find( name );
    if ( it == env.end() )
    {
      throw parse_error( line, "undefined literal '" + name + "'" );
    }
    return it->second ^ phase;
  };

  for ( auto const& [line, stmt] : detail::statements( text ) )
  {
    auto const tokens = detail::tokenize( stmt );
    if ( tokens.empty() )
    {
      continue;
    }
    if ( tokens[0] == "inputs" )
    {
      if ( seen_inputs )
      {
        throw parse_error( line, "duplicate inputs declaration" );
      }
      seen_inputs = true;
      for ( size_t i = 1; i < tokens.size(); ++i )
      {
        if ( env.count( tokens[i] ) )
        {
          throw parse_error( line, "duplicate definition of '" + tokens[i] + "'" );
        }
        env.emplace( tokens[i], net.create_pi( tokens[i] ) );
      }
      continue;
    }
    if ( tokens[0] == "outputs" )
    {
      if ( seen_outputs )
      {
        throw parse_error( line, "duplicate outputs declaration" );
      }
      seen_outputs = true;
      for ( size_t i = 1; i < tokens.size(); ++i )
      {
        if ( output_names.count( tokens[i] ) )
        {
          throw parse_error( line, "duplicate output name '" + tokens[i] + "'" );
        }
        output_names.insert( tokens[i] );
        output_order.push_back( tokens[i] );
      }
      continue;
    }
    if ( tokens.size() < 3 || tokens[1] != "=" )
    {
      throw parse_error( line, "expected 'name = expr'" );
    }
    std::string const& name = tokens[0];
    if ( env.count( name ) )
    {
      throw parse_error( line, "duplicate definition of '" + name + "'" );
    }
    signal value;
    if ( tokens[2] == "AND" || tokens[2] == "XOR" )
    {
      if ( tokens.size() != 5 )
      {
        throw parse_error( line, tokens[2] + " takes exactly two operands" );
      }
      signal const a = resolve_lit( line, tokens[3] );
      signal const b = resolve_lit( line, tokens[4] );
      value = net.create_gate( tokens[2] == "AND" ? gate_kind::and_gate : gate_kind::xor_gate, a, b );
    }
    else if ( tokens.size() == 3 )
    {
      value = resolve_lit( line, tokens[2] );
    }
    else
    {
      throw parse_error( line, "malformed expression" );
    }
    env.emplace( name, value );
  }

  for ( auto const& name : output_order )
  {
    auto const it = env.find( name );
    if ( it == env.end() )
    {
      throw parse_error( 0, "output '" + name + "' is never defined" );
    }
    net.create_po( name, it->second );
  }
  return net;
}

/*! \brief Writes the XAG text format: topologically ordered, deterministic. */
inline std::string write_xag_text( xag_network const& net )
{
  std::set<std::string> taken;
  for ( auto const& n : net.pi_names() )
  {
    taken.insert( n );
  }
  for ( auto const& [name, s] : net.outputs() )
  {
    (void)s;
    taken.insert( name );
  }

  std::vector<std::string> node_name( net.size() );
  node_name[0] = "0";
  for ( uint32_t i = 0; i < net.num_pis(); ++i )
  {
    node_name[net.pis()[i]] = net.pi_name( i );
  }

  std::ostringstream out;
  out << "inputs";
  for ( auto const& n : net.pi_names() )
  {
    out << ' ' << n;
  }
  out << '\n';
  out << "outputs";
  for ( auto const& [name, s] : net.outputs() )
  {
    (void)s;
    out << ' ' << name;
  }
  out << '\n';

  auto const live = live_nodes( net );
  uint32_t next_id = 1;
  auto fresh_name = [&]() {
    std::string candidate;
    do
    {
      candidate = "n" + std::to_string( next_id++ );
    } while ( taken.count( candidate ) );
    return candidate;
  };
  auto lit = [&]( signal s ) { return ( s.phase() ? "!" : "" ) + node_name[s.node()]; };

  for ( uint32_t id = 1; id < net.size(); ++id )
  {
    if ( !net.is_gate( id ) || !live[id] )
    {
      continue;
    }
    node_name[id] = fresh_name();
    out << node_name[id] << " = " << ( net.is_and( id ) ? "AND" : "XOR" ) << ' '
        << lit( net.fanin0( id ) ) << ' ' << lit( net.fanin1( id ) ) << '\n';
  }
  for ( auto const& [name, s] : net.outputs() )
  {
    out << name << " = " << lit( s ) << '\n';
  }
  return out.str();
}

namespace detail
{

struct blif_cover
{
  uint32_t line;
  std::vector<std::string> inputs;
  std::string output;
  std::vector<std::pair<std::string, char>> rows; // (input plane, output value)
};

} // namespace detail

/*! \brief Parses the supported BLIF subset into an XAG.
 *
 * `.names` tables are limited to two inputs; every cover is translated
 * into AND/XOR structure with complemented edges.  Unsupported
 * constructs (latches, wider covers, subcircuits) raise a parse_error
 * naming the offending line.
 */
inline xag_network parse_blif_subset( std::string const& text )
{
  std::vector<std::pair<uint32_t, std::vector<std::string>>> lines;
  {
    std::istringstream in( text );
    std::string raw;
    uint32_t line_no = 0;
    std::string pending;
    uint32_t pending_line = 0;
    while ( std::getline( in, raw ) )
    {
      ++line_no;
      if ( auto const pos = raw.find( '#' ); pos != std::string::npos )
      {
        raw.erase( pos );
      }
      bool continued = false;
      if ( auto const pos = raw.find_last_not_of( " \t\r" ); pos != std::string::npos && raw[pos] == '\\' )
      {
        raw.erase( pos );
        continued = true;
      }
      if ( pending.empty() )
      {
        pending_line = line_no;
      }
      pending += ' ' + raw;
      if ( continued )
      {
        continue;
      }
      auto tokens = detail::tokenize( pending );
      pending.clear();
      if ( !tokens.empty() )
      {
        lines.emplace_back( pending_line, std::move( tokens ) );
      }
    }
    if ( !pending.empty() )
    {
      auto tokens = detail::tokenize( pending );
      if ( !tokens.empty() )
      {
        lines.emplace_back( pending_line, std::move( tokens ) );
      }
    }
  }

  xag_network net;
  std::map<std::string, signal> env;
  std::vector<std::string> input_order, output_order;
  std::map<std::string, detail::blif_cover> covers;
  bool seen_model = false;

  for ( size_t li = 0; li < lines.size(); ++li )
  {
    auto const& [line, tokens] = lines[li];
    if ( tokens[0] == ".model" )
    {
      if ( seen_model )
      {
        throw parse_error( line, "unsupported: multiple .model sections" );
      }
      seen_model = true;
    }
    else if ( tokens[0] == ".inputs" )
    {
      for ( size_t i = 1; i < tokens.size(); ++i )
      {
        input_order.push_back( tokens[i] );
      }
    }
    else if ( tokens[0] == ".outputs" )
    {
      for ( size_t i = 1; i < tokens.size(); ++i )
      {
        output_order.push_back( tokens[i] );
      }
    }
    else if ( tokens[0] == ".names" )
    {
      if ( tokens.size() < 2 )
      {
        throw parse_error( line, ".names needs at least an output" );
      }
      detail::blif_cover cover;
      cover.line = line;
      cover.inputs.assign( tokens.begin() + 1, tokens.end() - 1 );
      cover.output = tokens.back();
      if ( cover.inputs.size() > 2 )
      {
        throw parse_error( line, "unsupported: .names with more than 2 inputs" );
      }
      /* collect cover rows */
      while ( li + 1 < lines.size() && lines[li + 1].second[0][0] != '.' )
      {
        auto const& [row_line, row_tokens] = lines[li + 1];
        if ( cover.inputs.empty() )
        {
          if ( row_tokens.size() != 1 || ( row_tokens[0] != "0" && row_tokens[0] != "1" ) )
          {
            throw parse_error( row_line, "malformed constant cover row" );
          }
          cover.rows.emplace_back( "", row_tokens[0][0] );
        }
        else
        {
          if ( row_tokens.size() != 2 || row_tokens[0].size() != cover.inputs.size() )
          {
            throw parse_error( row_line, "malformed cover row" );
          }
          cover.rows.emplace_back( row_tokens[0], row_tokens[1][0] );
        }
        ++li;
      }
      if ( covers.count( cover.output ) )
      {
        throw parse_error( line, "duplicate .names for '" + cover.output + "'" );
      }
      covers.emplace( cover.output, std::move( cover ) );
    }
    else if ( tokens[0] == ".end" )
    {
      break;
    }
    else if ( tokens[0][0] == '.' )
    {
      throw parse_error( line, "unsupported construct '" + tokens[0] + "'" );
    }
    else
    {
      throw parse_error( line, "stray tokens outside any section" );
    }
  }

  for ( auto const& name : input_order )
  {
    env.emplace( name, net.create_pi( name ) );
  }

  /* elaborate covers on demand; detect combinational cycles */
  std::set<std::string> visiting;
  std::function<signal( std::string const&, uint32_t )> elaborate =
      [&]( std::string const& name, uint32_t use_line ) -> signal {
    if ( auto const it = env.find( name ); it != env.end() )
    {
      return it->second;
    }
    auto const cit = covers.find( name );
    if ( cit == covers.end() )
    {
      throw parse_error( use_line, "undefined signal '" + name + "'" );
    }
    if ( visiting.count( name ) )
    {
      throw parse_error( cit->second.line, "cyclic definition of '" + name + "'" );
    }
    visiting.insert( name );
    auto const& cover = cit->second;

    std::vector<signal> fanins;
    for ( auto const& in : cover.inputs )
    {
      fanins.push_back( elaborate( in, cover.line ) );
    }

    /* evaluate cover exhaustively over its (at most 2) inputs */
    uint32_t const n = static_cast<uint32_t>( cover.inputs.size() );
    char out_value = cover.rows.empty() ? '1' : cover.rows.front().second;
    uint32_t tt = 0;
    for ( uint32_t m = 0; m < ( 1u << n ); ++m )
    {
      bool covered = false;
      for ( auto const& [plane, value] : cover.rows )
      {
        if ( value != out_value )
        {
          throw parse_error( cover.line, "mixed-polarity cover for '" + name + "'" );
        }
        bool match = true;
        for ( uint32_t i = 0; i < n; ++i )
        {
          if ( plane[i] == '-' )
          {
            continue;
          }
          if ( ( plane[i] == '1' ) != ( ( ( m >> i ) & 1u ) != 0u ) )
          {
            match = false;
            break;
          }
        }
        if ( match )
        {
          covered = true;
          break;
        }
      }
      bool bit = covered ? ( out_value == '1' ) : ( out_value != '1' );
      if ( bit )
      {
        tt |= 1u << m;
      }
    }

    signal result;
    uint32_t const full = ( 1u << ( 1u << n ) ) - 1;
    if ( n == 0 )
    {
      result = net.get_constant( tt != 0 );
    }
    else if ( n == 1 )
    {
      switch ( tt )
      {
      case 0b00: result = net.get_constant( false ); break;
      case 0b11: result = net.get_constant( true ); break;
      case 0b10: result = fanins[0]; break;
      default: result = !fanins[0]; break;
      }
    }
    else
    {
      if ( tt == 0 )
      {
        result = net.get_constant( false );
      }
      else if ( tt == full )
      {
        result = net.get_constant( true );
      }
      else
      {
        bool built = false;
        for ( auto const kind : { gate_kind::and_gate, gate_kind::xor_gate } )
        {
          for ( uint32_t ph = 0; ph < 4 && !built; ++ph )
          {
            uint32_t const a = ( ph & 1u ) ? 0b0101u : 0b1010u;
            uint32_t const b = ( ph & 2u ) ? 0b0011u : 0b1100u;
            uint32_t const g = kind == gate_kind::and_gate ? ( a & b ) : ( a ^ b );
            if ( g == tt || ( g ^ full ) == tt )
            {
              signal const s = net.create_gate( kind, fanins[0] ^ ( ( ph & 1u ) != 0u ),
                                                fanins[1] ^ ( ( ph & 2u ) != 0u ) );
              result = s ^ ( ( g ^ full ) == tt );
              built = true;
            }
          }
          if ( built )
          {
            break;
          }
        }
        if ( !built )
        {
          /* single-variable functions of 2 inputs */
          result = ( tt == 0b1010u ) ? fanins[0] : ( tt == 0b0101u ) ? !fanins[0]
                   : ( tt == 0b1100u )            ? fanins[1]
                                                  : !fanins[1];
        }
      }
    }
    visiting.erase( name );
    env.emplace( name, result );
    return result;
  };

  for ( auto const& name : output_order )
  {
    net.create_po( name, elaborate( name, 0 ) );
  }
  return net;
}

} // namespace cuttrace
