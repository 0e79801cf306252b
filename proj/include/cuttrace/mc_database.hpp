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
  \file mc_database.hpp
  \brief Database of MC-optimal XAG fragments for all 4-input NPN classes

  Fragments are synthesized by iterative deepening on the AND count: a
  circuit with g AND gates is searched for by assigning each gate two
  inputs drawn from affine (XOR plus constant) combinations of the
  inputs and earlier gate outputs, and requiring the target to be an
  affine combination of inputs and gate outputs.  The first solution
  found is therefore AND-minimal.
*/

#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fragment.hpp"
#include "npn.hpp"
#include "truth.hpp"

namespace cuttrace
{

/*! \brief An MC-optimal implementation over affine gate inputs.
 *
 * Basis element 0 is the constant-one function, elements 1..n are the
 * placeholder leaves L0..L(n-1), and element n+j is the output of AND
 * gate j.  Gate inputs and the output are bit masks over this basis.
 */
struct affine_fragment
{
  uint32_t num_vars{ 0 };
  std::vector<std::pair<uint16_t, uint16_t>> gates;
  uint16_t output_mask{ 0 };

  uint32_t and_count() const { return static_cast<uint32_t>( gates.size() ); }
};

namespace detail
{

class mc_search
{
public:
  mc_search( truth6 target, uint32_t n ) : target_( static_cast<uint16_t>( target ) ), n_( n )
  {
    member_.assign( 1u << 16, false );
    span_.reserve( 1u << 8 );
    push_basis( static_cast<uint16_t>( truth_mask( n ) ) ); // constant one
    for ( uint32_t i = 0; i < n; ++i )
    {
      push_basis( static_cast<uint16_t>( truth_var( i ) & truth_mask( n ) ) );
    }
  }

  std::optional<affine_fragment> run( uint32_t budget )
  {
    for ( uint32_t g = 0; g <= budget; ++g )
    {
      gates_.clear();
      if ( search( g ) )
      {
        affine_fragment frag;
        frag.num_vars = n_;
        frag.gates = gates_;
        frag.output_mask = output_mask_;
        return frag;
      }
    }
    return std::nullopt;
  }

private:
  void push_basis( uint16_t value )
  {
    size_t const old_size = span_.size();
    if ( old_size == 0 )
    {
      span_.push_back( 0 );
      member_[0] = true;
    }
    size_t const base = span_.size();
    span_.resize( 2 * base );
    for ( size_t m = 0; m < base; ++m )
    {
      uint16_t const v = span_[m] ^ value;
      span_[base + m] = v;
      member_[v] = true;
    }
    (void)old_size;
  }

  void pop_basis()
  {
    size_t const base = span_.size() / 2;
    for ( size_t m = base; m < span_.size(); ++m )
    {
      member_[span_[m]] = false;
    }
    span_.resize( base );
  }

  /* membership queries rely on basis independence: every new gate output
   * is required to lie outside the current span, so span values are
   * distinct and pop_basis clears exactly the added half */
  bool in_span( uint16_t v ) const { return member_[v]; }

  bool search( uint32_t remaining )
  {
    if ( in_span( target_ ) )
    {
      /* only reachable when remaining equals the full budget of this
       * deepening round; smaller budgets were exhausted before */
      output_mask_ = mask_of( target_ );
      return true;
    }
    if ( remaining == 0 )
    {
      return false;
    }
    if ( remaining == 1 )
    {
      return close_with_last_gate();
    }
    size_t const size = span_.size();
    for ( size_t a = 0; a < size; ++a )
    {
      for ( size_t b = a; b < size; ++b )
      {
        uint16_t const t = span_[a] & span_[b];
        if ( in_span( t ) )
        {
          continue;
        }
        gates_.emplace_back( static_cast<uint16_t>( a ), static_cast<uint16_t>( b ) );
        push_basis( t );
        if ( search( remaining - 1 ) )
        {
          return true;
        }
        pop_basis();
        gates_.pop_back();
      }
    }
    return false;
  }

  /* the last gate's output must bridge target into the affine span:
   * target = s ^ t with s in span and t = span[a] & span[b] */
  bool close_with_last_gate()
  {
    size_t const size = span_.size();
    for ( size_t s = 0; s < size; ++s )
    {
      uint16_t const t = target_ ^ span_[s];
      if ( in_span( t ) )
      {
        continue;
      }
      for ( size_t a = 0; a < size; ++a )
      {
        if ( ( span_[a] & t ) != t )
        {
          continue;
        }
        for ( size_t b = a; b < size; ++b )
        {
          if ( ( span_[a] & span_[b] ) == t )
          {
            gates_.emplace_back( static_cast<uint16_t>( a ), static_cast<uint16_t>( b ) );
            output_mask_ = static_cast<uint16_t>( s | size );
            return true;
          }
        }
      }
    }
    return false;
  }

  uint16_t mask_of( uint16_t value ) const
  {
    for ( size_t m = 0; m < span_.size(); ++m )
    {
      if ( span_[m] == value )
      {
        return static_cast<uint16_t>( m );
      }
    }
    return 0;
  }

  uint16_t target_;
  uint32_t n_;
  std::vector<uint16_t> span_;
  std::vector<bool> member_;
  std::vector<std::pair<uint16_t, uint16_t>> gates_;
  uint16_t output_mask_{ 0 };
};

/* balanced XOR tree over the basis elements selected by `mask`;
 * constants fold into the returned phase */
inline fragment_ref build_affine_combination( xag_fragment& frag, uint16_t mask, uint32_t num_vars,
                                              npn_transform const& t, uint32_t actual_leaves,
                                              std::vector<fragment_ref> const& gate_refs )
{
  bool phase = ( mask & 1u ) != 0u;
  std::vector<fragment_ref> terms;
  for ( uint32_t i = 0; i < num_vars; ++i )
  {
    if ( ( mask >> ( 1u + i ) ) & 1u )
    {
      bool const neg = ( ( t.input_neg >> i ) & 1u ) != 0u;
      if ( t.perm[i] < actual_leaves )
      {
        terms.push_back( fragment_ref::make_leaf( t.perm[i], neg ) );
      }
      else
      {
        phase ^= neg; // padded leaf is constant zero
      }
    }
  }
  for ( size_t j = 0; j < gate_refs.size(); ++j )
  {
    if ( ( mask >> ( 1u + num_vars + j ) ) & 1u )
    {
      terms.push_back( gate_refs[j] );
    }
  }
  if ( terms.empty() )
  {
    return fragment_ref::make_constant( phase );
  }
  while ( terms.size() > 1 )
  {
    std::vector<fragment_ref> next;
    for ( size_t i = 0; i + 1 < terms.size(); i += 2 )
    {
      frag.gates.push_back( fragment_gate{ gate_kind::xor_gate, { terms[i], terms[i + 1] } } );
      next.push_back( fragment_ref::make_gate( static_cast<uint32_t>( frag.gates.size() - 1 ) ) );
    }
    if ( terms.size() % 2 )
    {
      next.push_back( terms.back() );
    }
    terms = std::move( next );
  }
  terms[0].phase ^= phase;
  return terms[0];
}

} // namespace detail

/*! \brief Searches an AND-minimal fragment for `tt` by iterative deepening.
 *
 * Returns std::nullopt when no implementation with at most `budget` AND
 * gates exists; the caller raises the budget.  Affine functions yield
 * gate-free fragments.
 */
inline std::optional<affine_fragment> exact_mc_synthesize( truth6 tt, uint32_t n, uint32_t budget )
{
  if ( n > 4u )
  {
    throw std::invalid_argument( "exact_mc_synthesize: only up to 4 variables supported" );
  }
  detail::mc_search search( tt & truth_mask( n ), n );
  return search.run( budget );
}

/*! \brief NPN-classified database of MC-optimal fragments. */
class mc_database
{
public:
  mc_database() = default;

  /*! \brief Builds one entry per NPN class of n-variable functions. */
  static mc_database build( uint32_t n, uint32_t budget = 7 )
  {
    if ( n < 2u || n > 4u )
    {
      throw std::invalid_argument( "mc_database: arity must be between 2 and 4" );
    }
    mc_database db;
    db.num_vars_ = n;
    uint64_t const num_functions = uint64_t( 1 ) << ( 1u << n );
    for ( uint64_t tt = 0; tt < num_functions; ++tt )
    {
      auto const canon = npn_canonicalize( tt, n ).canonical;
      if ( db.entries_.count( static_cast<uint16_t>( canon ) ) )
      {
        continue;
      }
      auto frag = exact_mc_synthesize( canon, n, budget );
      if ( !frag )
      {
        throw std::runtime_error( "mc_database: AND budget exhausted for class " +
                                  std::to_string( canon ) );
      }
      db.entries_.emplace( static_cast<uint16_t>( canon ), std::move( *frag ) );
    }
    return db;
  }

  uint32_t num_vars() const { return num_vars_; }
  size_t size() const { return entries_.size(); }
  std::map<uint16_t, affine_fragment> const& entries() const { return entries_; }

  /*! \brief Largest AND count over all stored fragments. */
  uint32_t max_and_count() const
  {
    uint32_t m = 0;
    for ( auto const& [tt, frag] : entries_ )
    {
      (void)tt;
      m = std::max( m, frag.and_count() );
    }
    return m;
  }

  /*! \brief Instantiable fragment for an arbitrary function of `n <= num_vars()` inputs.
   *
   * Canonicalizes the (padded) function, fetches the class fragment,
   * and undoes the transform by rewiring leaves, flipping input phases,
   * and complementing the output.
   */
  xag_fragment lookup( truth6 tt, uint32_t n ) const
  {
    if ( n > num_vars_ )
    {
      throw std::invalid_argument( "mc_database::lookup: function arity exceeds database arity" );
    }
    truth6 const padded = truth_extend( tt & truth_mask( n ), n, num_vars_ );
    auto const res = npn_canonicalize( padded, num_vars_ );
    auto const it = entries_.find( static_cast<uint16_t>( res.canonical ) );
    if ( it == entries_.end() )
    {
      throw std::logic_error( "mc_database::lookup: class missing from database" );
    }
    auto const& stored = it->second;

    xag_fragment frag;
    frag.num_leaves = n;
    std::vector<fragment_ref> gate_refs;
    for ( auto const& [mask_a, mask_b] : stored.gates )
    {
      fragment_ref const a =
          detail::build_affine_combination( frag, mask_a, num_vars_, res.transform, n, gate_refs );
      fragment_ref const b =
          detail::build_affine_combination( frag, mask_b, num_vars_, res.transform, n, gate_refs );
      frag.gates.push_back( fragment_gate{ gate_kind::and_gate, { a, b } } );
      gate_refs.push_back( fragment_ref::make_gate( static_cast<uint32_t>( frag.gates.size() - 1 ) ) );
    }
    frag.output =
        detail::build_affine_combination( frag, stored.output_mask, num_vars_, res.transform, n, gate_refs );
    frag.output.phase ^= res.transform.output_neg;
    return frag;
  }

  /*! \brief One line per entry: "tt_hex g maskA maskB ... out out_mask". */
  std::string save() const
  {
    std::ostringstream out;
    out << "# mc-optimal xag fragment database, arity " << num_vars_ << ", " << entries_.size()
        << " classes\n";
    for ( auto const& [tt, frag] : entries_ )
    {
      out << std::hex << tt << std::dec << ' ' << frag.gates.size();
      for ( auto const& [a, b] : frag.gates )
      {
        out << ' ' << std::hex << a << ' ' << b << std::dec;
      }
      out << " out " << std::hex << frag.output_mask << std::dec << '\n';
    }
    return out.str();
  }

  void save_file( std::string const& path ) const
  {
    std::ofstream out( path );
    if ( !out )
    {
      throw std::runtime_error( "mc_database: cannot write " + path );
    }
    out << save();
  }

  static mc_database load( std::string const& text, uint32_t n )
  {
    mc_database db;
    db.num_vars_ = n;
    std::istringstream in( text );
    std::string line;
    uint32_t line_no = 0;
    while ( std::getline( in, line ) )
    {
      ++line_no;
      if ( line.empty() || line.front() == '#' )
      {
        continue;
      }
      std::istringstream ls( line );
      uint64_t tt;
      size_t g;
      if ( !( ls >> std::hex >> tt >> std::dec >> g ) )
      {
        throw std::runtime_error( "mc_database: malformed line " + std::to_string( line_no ) );
      }
      affine_fragment frag;
      frag.num_vars = n;
      for ( size_t i = 0; i < g; ++i )
      {
        uint16_t a, b;
        if ( !( ls >> std::hex >> a >> b >> std::dec ) )
        {
          throw std::runtime_error( "mc_database: truncated gate list on line " + std::to_string( line_no ) );
        }
        frag.gates.emplace_back( a, b );
      }
      std::string kw;
      uint16_t out_mask;
      if ( !( ls >> kw >> std::hex >> out_mask ) || kw != "out" )
      {
        throw std::runtime_error( "mc_database: missing output mask on line " + std::to_string( line_no ) );
      }
      frag.output_mask = out_mask;
      db.entries_.emplace( static_cast<uint16_t>( tt ), std::move( frag ) );
    }
    return db;
  }

  static mc_database load_file( std::string const& path, uint32_t n )
  {
    std::ifstream in( path );
    if ( !in )
    {
      throw std::runtime_error( "mc_database: cannot read " + path );
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return load( buf.str(), n );
  }

private:
  uint32_t num_vars_{ 0 };
  std::map<uint16_t, affine_fragment> entries_;
};

} // namespace cuttrace
