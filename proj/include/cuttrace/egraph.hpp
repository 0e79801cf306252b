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
  \file egraph.hpp
  \brief E-graph over XAG terms, populated by tracing cut replacements

  E-nodes mirror network nodes: gates reference (e-node, phase) operand
  pairs normalized like network signals, and hashconsing deduplicates
  shared structure automatically.  Union-find carries a parity bit, so a
  replacement root that is the complement of the original root unions
  cleanly; phases stay on operand edges and union arguments.

  Every structural change is logged as a trace event; writing the log
  and replaying it reconstructs an isomorphic e-graph.  For sources with
  at most 12 primary inputs, every e-node carries an exhaustive
  simulation signature and unions are checked for soundness.
*/

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "fragment.hpp"
#include "io.hpp"
#include "xag.hpp"

namespace cuttrace
{

struct trace_soundness_error : public std::logic_error
{
  using std::logic_error::logic_error;
};

/*! \brief Reference to an e-node together with a complement flag. */
struct eg_signal
{
  uint32_t id{ 0 };
  bool phase{ false };

  eg_signal() = default;
  eg_signal( uint32_t id_, bool phase_ ) : id( id_ ), phase( phase_ ) {}
  eg_signal operator^( bool p ) const { return eg_signal( id, phase != p ); }
  bool operator==( eg_signal const& other ) const = default;
};

struct enode
{
  gate_kind kind{ gate_kind::constant };
  eg_signal operand[2];   // gates only; canonical at creation time
  uint32_t pi_index{ 0 }; // PIs only
  std::string pi_name;    // PIs only
};

/*! \brief Serialized structural event; the log is a replayable trace. */
struct trace_event
{
  enum class tag : uint8_t
  {
    node_def,
    merge,
    output
  };
  tag kind{ tag::node_def };
  uint32_t id{ 0 };          // node_def: defined id; merge: first id
  uint32_t other{ 0 };       // merge: second id
  bool inv{ false };         // merge: complement flag
  gate_kind node_kind{ gate_kind::constant };
  eg_signal ops[2];          // node_def of gates
  std::string name;          // PI name or output name
  eg_signal out;             // output literal
};

class egraph
{
public:
  /*! \brief `expected_pis` enables signature checking when at most 12. */
  explicit egraph( uint32_t expected_pis = 0 )
      : expected_pis_( expected_pis ), check_signatures_( expected_pis > 0 && expected_pis <= 12u )
  {
    if ( check_signatures_ )
    {
      sig_blocks_ = expected_pis_ <= 6u ? 1u : ( size_t( 1 ) << ( expected_pis_ - 6u ) );
      pi_patterns_ = exhaustive_patterns( expected_pis_ );
    }
    enode c;
    c.kind = gate_kind::constant;
    push_enode( c );
  }

  uint32_t num_enodes() const { return static_cast<uint32_t>( nodes_.size() ); }
  enode const& node( uint32_t id ) const { return nodes_[id]; }
  uint32_t num_pis() const { return num_pis_; }
  bool signatures_enabled() const { return check_signatures_; }
  std::vector<trace_event> const& events() const { return events_; }
  std::vector<std::tuple<std::string, uint32_t, bool>> const& outputs() const { return outputs_; }

  eg_signal constant_zero() const { return eg_signal( 0, false ); }

  /*! \brief find with parity: (canonical id, phase of `id` relative to it). */
  std::pair<uint32_t, bool> find( uint32_t id ) const
  {
    bool parity = false;
    while ( parent_[id] != id )
    {
      parity ^= parity_[id];
      id = parent_[id];
    }
    return { id, parity };
  }

  eg_signal canonicalize( eg_signal s ) const
  {
    auto const [root, parity] = find( s.id );
    return eg_signal( root, s.phase ^ parity );
  }

  /*! \brief PI e-nodes are deduplicated by name, so re-seeding the same
   * source network (e.g. tracing a second flow order) reuses them.
   */
  uint32_t insert_pi( std::string const& name )
  {
    if ( auto const it = pi_by_name_.find( name ); it != pi_by_name_.end() )
    {
      return it->second;
    }
    enode n;
    n.kind = gate_kind::pi;
    n.pi_index = num_pis_++;
    n.pi_name = name;
    uint32_t const id = push_enode( n );
    pi_by_name_.emplace( name, id );
    trace_event ev;
    ev.kind = trace_event::tag::node_def;
    ev.id = id;
    ev.node_kind = gate_kind::pi;
    ev.name = name;
    events_.push_back( std::move( ev ) );
    return id;
  }

  /*! \brief Hashcons insertion with the same normalization as the network.
   *
   * Returns a signal `s` with: function(query) = function(s.id) ^ s.phase.
   */
  eg_signal insert_gate( gate_kind kind, eg_signal a, eg_signal b )
  {
    a = canonicalize( a );
    b = canonicalize( b );
    eg_signal const const0 = canonicalize( eg_signal( 0, false ) );

    auto const is_const = [&]( eg_signal s ) { return s.id == const0.id; };
    auto const const_value = [&]( eg_signal s ) { return s.phase != const0.phase; };

    if ( kind == gate_kind::and_gate )
    {
      if ( a == b )
      {
        return a;
      }
      if ( a.id == b.id )
      {
        return eg_signal( 0, false ); // complementary operands
      }
      if ( is_const( a ) )
      {
        return const_value( a ) ? b : eg_signal( 0, false );
      }
      if ( is_const( b ) )
      {
        return const_value( b ) ? a : eg_signal( 0, false );
      }
      if ( b.id < a.id || ( b.id == a.id && !b.phase && a.phase ) )
      {
        std::swap( a, b );
      }
      return hashcons( kind, a, b, false );
    }

    /* XOR */
    if ( a.id == b.id )
    {
      return eg_signal( 0, a.phase != b.phase );
    }
    if ( is_const( a ) )
    {
      return b ^ const_value( a );
    }
    if ( is_const( b ) )
    {
      return a ^ const_value( b );
    }
    bool const out = a.phase != b.phase;
    a.phase = false;
    b.phase = false;
    if ( b.id < a.id )
    {
      std::swap( a, b );
    }
    return hashcons( kind, a, b, out );
  }

  /*! \brief Asserts that signals `a` and `b` denote the same function and
   * merges their classes (with phase reconciliation).  No-op when they
   * already share a class.
   */
  void merge( eg_signal a, eg_signal b )
  {
    auto const ca = canonicalize( a );
    auto const cb = canonicalize( b );
    if ( ca.id == cb.id )
    {
      if ( ca.phase != cb.phase )
      {
        throw trace_soundness_error( "merge: class united with its own complement" );
      }
      return;
    }
    if ( check_signatures_ && !signals_equal( a, b ) )
    {
      throw trace_soundness_error( "merge: simulation signatures differ" );
    }
    trace_event ev;
    ev.kind = trace_event::tag::merge;
    ev.id = a.id;
    ev.other = b.id;
    ev.inv = a.phase != b.phase;
    events_.push_back( std::move( ev ) );

    link( ca, cb );
    rebuild();
  }

  void register_output( std::string const& name, eg_signal s )
  {
    for ( auto const& [n, id, ph] : outputs_ )
    {
      if ( n == name )
      {
        if ( canonicalize( eg_signal( id, ph ) ) == canonicalize( s ) )
        {
          return;
        }
        throw trace_soundness_error( "output '" + name + "' registered with conflicting signals" );
      }
    }
    outputs_.emplace_back( name, s.id, s.phase );
    trace_event ev;
    ev.kind = trace_event::tag::output;
    ev.name = name;
    ev.out = s;
    events_.push_back( std::move( ev ) );
  }

  /*! \brief Classes with their members, deterministic order (by smallest member id). */
  struct eclass
  {
    uint32_t repr;                                   // canonical id
    std::vector<std::pair<uint32_t, bool>> members;  // (e-node, parity to class function)
  };

  std::vector<eclass> classes() const
  {
    std::map<uint32_t, eclass> by_root;
    for ( uint32_t id = 0; id < num_enodes(); ++id )
    {
      auto const [root, parity] = find( id );
      auto& c = by_root[root];
      c.repr = root;
      c.members.emplace_back( id, parity );
    }
    std::vector<eclass> result;
    result.reserve( by_root.size() );
    for ( auto& [root, c] : by_root )
    {
      (void)root;
      result.push_back( std::move( c ) );
    }
    return result;
  }

  uint32_t num_classes() const
  {
    uint32_t count = 0;
    for ( uint32_t id = 0; id < num_enodes(); ++id )
    {
      if ( find( id ).first == id )
      {
        ++count;
      }
    }
    return count;
  }

  /*! \brief Exhaustive simulation signature of an e-node (checking enabled only). */
  std::vector<uint64_t> const& signature( uint32_t id ) const { return signatures_[id]; }

  bool signals_equal( eg_signal a, eg_signal b ) const
  {
    auto const& sa = signatures_[a.id];
    auto const& sb = signatures_[b.id];
    uint64_t const flip = ( a.phase != b.phase ) ? ~uint64_t( 0 ) : 0u;
    uint64_t const mask =
        expected_pis_ < 6u ? ( uint64_t( 1 ) << ( 1u << expected_pis_ ) ) - 1 : ~uint64_t( 0 );
    for ( size_t w = 0; w < sa.size(); ++w )
    {
      if ( ( ( sa[w] ^ sb[w] ^ flip ) & ( w + 1 == sa.size() ? mask : ~uint64_t( 0 ) ) ) != 0u )
      {
        return false;
      }
    }
    return true;
  }

  /*! \brief Checks that all members of every class simulate identically. */
  void verify_class_signatures() const
  {
    if ( !check_signatures_ )
    {
      return;
    }
    for ( uint32_t id = 0; id < num_enodes(); ++id )
    {
      auto const [root, parity] = find( id );
      if ( !signals_equal( eg_signal( id, parity ), eg_signal( root, false ) ) )
      {
        throw trace_soundness_error( "class member signature mismatch at e-node " +
                                     std::to_string( id ) );
      }
    }
  }

  /*! \brief Serializes the event log in the line-based trace format. */
  std::string write_trace() const
  {
    std::ostringstream out;
    auto lit = [&]( eg_signal s ) { return ( s.phase ? "!" : "" ) + std::to_string( s.id ); };
    for ( auto const& ev : events_ )
    {
      switch ( ev.kind )
      {
      case trace_event::tag::node_def:
        if ( ev.node_kind == gate_kind::constant )
        {
          out << "node " << ev.id << " CONST0\n";
        }
        else if ( ev.node_kind == gate_kind::pi )
        {
          out << "node " << ev.id << " PI " << ev.name << '\n';
        }
        else
        {
          out << "node " << ev.id << ' ' << ( ev.node_kind == gate_kind::and_gate ? "AND" : "XOR" )
              << ' ' << lit( ev.ops[0] ) << ' ' << lit( ev.ops[1] ) << '\n';
        }
        break;
      case trace_event::tag::merge:
        out << "union " << ev.id << ' ' << ev.other << ( ev.inv ? " inv\n" : "\n" );
        break;
      case trace_event::tag::output:
        out << "output " << ev.name << ' ' << lit( ev.out ) << '\n';
        break;
      }
    }
    return out.str();
  }

private:
  uint32_t push_enode( enode n )
  {
    uint32_t const id = static_cast<uint32_t>( nodes_.size() );
    parent_.push_back( id );
    parity_.push_back( false );
    if ( check_signatures_ )
    {
      signatures_.push_back( compute_signature( n ) );
    }
    nodes_.push_back( std::move( n ) );
    if ( id == 0 )
    {
      trace_event ev;
      ev.kind = trace_event::tag::node_def;
      ev.id = 0;
      ev.node_kind = gate_kind::constant;
      events_.push_back( std::move( ev ) );
    }
    return id;
  }

  std::vector<uint64_t> compute_signature( enode const& n ) const
  {
    std::vector<uint64_t> sig( sig_blocks_, 0 );
    if ( n.kind == gate_kind::pi )
    {
      if ( n.pi_index < pi_patterns_.size() )
      {
        sig = pi_patterns_[n.pi_index];
      }
      return sig;
    }
    if ( n.kind == gate_kind::constant )
    {
      return sig;
    }
    auto const fetch = [&]( eg_signal s, size_t w ) {
      uint64_t const v = signatures_[s.id][w];
      return s.phase ? ~v : v;
    };
    for ( size_t w = 0; w < sig_blocks_; ++w )
    {
      uint64_t const a = fetch( n.operand[0], w );
      uint64_t const b = fetch( n.operand[1], w );
      sig[w] = n.kind == gate_kind::and_gate ? ( a & b ) : ( a ^ b );
    }
    return sig;
  }

  struct key_hash
  {
    size_t operator()( std::tuple<uint8_t, uint64_t, uint64_t> const& k ) const
    {
      auto const& [a, b, c] = k;
      size_t h = std::hash<uint64_t>{}( b );
      h ^= std::hash<uint64_t>{}( c ) + 0x9e3779b97f4a7c15ull + ( h << 6 ) + ( h >> 2 );
      return h ^ a;
    }
  };

  static std::tuple<uint8_t, uint64_t, uint64_t> make_key( gate_kind kind, eg_signal a, eg_signal b )
  {
    return { static_cast<uint8_t>( kind ), ( uint64_t( a.id ) << 1 ) | a.phase,
             ( uint64_t( b.id ) << 1 ) | b.phase };
  }

  /* canonical key of an existing gate e-node; `delta` receives the phase
   * pulled out while re-normalizing the stored operands */
  std::tuple<uint8_t, uint64_t, uint64_t> canonical_key( uint32_t id, bool& delta ) const
  {
    enode const& n = nodes_[id];
    eg_signal a = canonicalize( n.operand[0] );
    eg_signal b = canonicalize( n.operand[1] );
    delta = false;
    if ( n.kind == gate_kind::xor_gate )
    {
      delta = a.phase != b.phase;
      a.phase = false;
      b.phase = false;
    }
    if ( std::make_pair( b.id, b.phase ) < std::make_pair( a.id, a.phase ) )
    {
      std::swap( a, b );
    }
    return make_key( n.kind, a, b );
  }

  eg_signal hashcons( gate_kind kind, eg_signal a, eg_signal b, bool out )
  {
    auto const key = make_key( kind, a, b );
    if ( auto const it = hash_.find( key ); it != hash_.end() )
    {
      auto const& [e, delta] = it->second;
      return eg_signal( e, out != delta );
    }
    enode n;
    n.kind = kind;
    n.operand[0] = a;
    n.operand[1] = b;
    uint32_t const id = push_enode( n );
    hash_.emplace( key, std::make_pair( id, false ) );

    trace_event ev;
    ev.kind = trace_event::tag::node_def;
    ev.id = id;
    ev.node_kind = kind;
    ev.ops[0] = a;
    ev.ops[1] = b;
    events_.push_back( std::move( ev ) );
    return eg_signal( id, out );
  }

  void link( eg_signal ca, eg_signal cb )
  {
    /* function(ca.id) ^ ca.phase == function(cb.id) ^ cb.phase */
    parent_[cb.id] = ca.id;
    parity_[cb.id] = ca.phase != cb.phase;
  }

  /*! \brief Congruence repair: recanonicalize every gate e-node and merge
   * classes whose e-nodes collide on the same canonical key.
   */
  void rebuild()
  {
    bool changed = true;
    while ( changed )
    {
      changed = false;
      hash_.clear();
      for ( uint32_t id = 0; id < num_enodes(); ++id )
      {
        if ( nodes_[id].kind != gate_kind::and_gate && nodes_[id].kind != gate_kind::xor_gate )
        {
          continue;
        }
        bool delta = false;
        auto const key = canonical_key( id, delta );
        auto const it = hash_.find( key );
        if ( it == hash_.end() )
        {
          hash_.emplace( key, std::make_pair( id, delta ) );
          continue;
        }
        auto const [e, de] = it->second;
        auto const [root_e, par_e] = find( e );
        auto const [root_i, par_i] = find( id );
        if ( root_e != root_i )
        {
          /* function(id) = F(key)^delta, function(e) = F(key)^de */
          link( eg_signal( root_e, par_e != de ), eg_signal( root_i, par_i != delta ) );
          changed = true;
        }
        else if ( ( par_i != delta ) != ( par_e != de ) )
        {
          throw trace_soundness_error( "congruent e-nodes with inconsistent parity" );
        }
      }
    }
  }

  uint32_t expected_pis_{ 0 };
  bool check_signatures_{ false };
  size_t sig_blocks_{ 0 };
  uint32_t num_pis_{ 0 };
  std::vector<enode> nodes_;
  std::vector<uint32_t> parent_;
  std::vector<bool> parity_;
  std::vector<std::vector<uint64_t>> signatures_;
  std::vector<std::vector<uint64_t>> pi_patterns_;
  std::unordered_map<std::tuple<uint8_t, uint64_t, uint64_t>, std::pair<uint32_t, bool>, key_hash> hash_;
  std::unordered_map<std::string, uint32_t> pi_by_name_;
  std::vector<std::tuple<std::string, uint32_t, bool>> outputs_;
  std::vector<trace_event> events_;
};

/*! \brief Builds the fragment into the e-graph over leaf signals; returns the root. */
inline eg_signal instantiate( egraph& eg, xag_fragment const& frag, std::vector<eg_signal> const& leaves,
                              std::vector<eg_signal>* per_gate = nullptr )
{
  std::vector<eg_signal> built( frag.gates.size() );
  auto const resolve = [&]( fragment_ref const& r ) -> eg_signal {
    switch ( r.kind )
    {
    case fragment_ref::target::constant:
      return eg_signal( 0, r.phase );
    case fragment_ref::target::leaf:
      return leaves.at( r.index ) ^ r.phase;
    default:
      return built.at( r.index ) ^ r.phase;
    }
  };
  for ( size_t i = 0; i < frag.gates.size(); ++i )
  {
    built[i] = eg.insert_gate( frag.gates[i].kind, resolve( frag.gates[i].fanin[0] ),
                               resolve( frag.gates[i].fanin[1] ) );
  }
  if ( per_gate )
  {
    *per_gate = built;
  }
  return resolve( frag.output );
}

/*! \brief Bridge between a network being optimized and the shared e-graph.
 *
 * Keeps the node-to-e-node map in sync while passes replace cuts: new
 * network nodes created for an accepted replacement are mapped to their
 * e-graph counterparts, and substitution aliases propagate through the
 * `on_alias` hook.
 */
class cut_tracer
{
public:
  explicit cut_tracer( egraph& eg ) : eg_( eg ) {}

  egraph& graph() { return eg_; }

  /*! \brief Seeds the e-graph with the live part of `net` and registers outputs. */
  void init_from_network( xag_network const& net )
  {
    map_.clear();
    mapped_.clear();
    ensure_size( net.size() );
    map_[0] = eg_signal( 0, false );
    mapped_[0] = true;
    for ( uint32_t i = 0; i < net.num_pis(); ++i )
    {
      uint32_t const pi_node = net.pis()[i];
      map_[pi_node] = eg_signal( eg_.insert_pi( net.pi_name( i ) ), false );
      mapped_[pi_node] = true;
    }
    auto const live = live_nodes( net );
    for ( uint32_t id = 1; id < net.size(); ++id )
    {
      if ( !net.is_gate( id ) || !live[id] )
      {
        continue;
      }
      map_[id] = eg_.insert_gate( net.kind_of( id ), enode_of( net.fanin0( id ) ),
                                  enode_of( net.fanin1( id ) ) );
      mapped_[id] = true;
    }
    for ( auto const& [name, s] : net.outputs() )
    {
      eg_.register_output( name, enode_of( s ) );
    }
  }

  bool is_mapped( uint32_t node ) const { return node < mapped_.size() && mapped_[node]; }

  eg_signal enode_of( signal s ) const
  {
    if ( !is_mapped( s.node() ) )
    {
      throw std::logic_error( "cut_tracer: unmapped network node" );
    }
    return map_[s.node()] ^ s.phase();
  }

  /*! \brief Records a candidate replacement for `old_root` without touching
   * the network (used by the record-all policy).
   */
  void record_candidate( uint32_t old_root, xag_fragment const& frag, std::vector<signal> const& leaves )
  {
    std::vector<eg_signal> eg_leaves;
    eg_leaves.reserve( leaves.size() );
    for ( auto const l : leaves )
    {
      eg_leaves.push_back( enode_of( l ) );
    }
    eg_signal const root = instantiate( eg_, frag, eg_leaves );
    eg_.merge( map_[old_root], root );
  }

  /*! \brief Instantiates an accepted replacement into both the network and
   * the e-graph, records the union, and maps the new network nodes.
   */
  signal apply_replacement( xag_network& net, uint32_t old_root, xag_fragment const& frag,
                            std::vector<signal> const& leaves )
  {
    std::vector<eg_signal> eg_leaves;
    eg_leaves.reserve( leaves.size() );
    for ( auto const l : leaves )
    {
      eg_leaves.push_back( enode_of( l ) );
    }
    std::vector<eg_signal> eg_gates;
    eg_signal const eg_root = instantiate( eg_, frag, eg_leaves, &eg_gates );
    eg_.merge( map_[old_root], eg_root );

    std::vector<signal> net_gates( frag.gates.size() );
    auto const resolve = [&]( fragment_ref const& r ) -> signal {
      switch ( r.kind )
      {
      case fragment_ref::target::constant:
        return net.get_constant( r.phase );
      case fragment_ref::target::leaf:
        return leaves.at( r.index ) ^ r.phase;
      default:
        return net_gates.at( r.index ) ^ r.phase;
      }
    };
    ensure_size( net.size() + static_cast<uint32_t>( frag.gates.size() ) );
    for ( size_t i = 0; i < frag.gates.size(); ++i )
    {
      net_gates[i] =
          net.create_gate( frag.gates[i].kind, resolve( frag.gates[i].fanin[0] ),
                           resolve( frag.gates[i].fanin[1] ) );
      ensure_size( net.size() );
      uint32_t const n = net_gates[i].node();
      if ( !mapped_[n] )
      {
        map_[n] = eg_gates[i] ^ net_gates[i].phase();
        mapped_[n] = true;
      }
    }
    return resolve( frag.output );
  }

  /*! \brief Substitution hook: keeps aliases mapped.  Pass to xag_network::substitute. */
  std::function<void( uint32_t, signal )> alias_hook()
  {
    return [this]( uint32_t old_node, signal repl ) {
      ensure_size( std::max( old_node, repl.node() ) + 1 );
      if ( mapped_[old_node] && !mapped_[repl.node()] )
      {
        map_[repl.node()] = map_[old_node] ^ repl.phase();
        mapped_[repl.node()] = true;
      }
    };
  }

private:
  void ensure_size( uint32_t n )
  {
    if ( map_.size() < n )
    {
      map_.resize( n );
      mapped_.resize( n, false );
    }
  }

  egraph& eg_;
  std::vector<eg_signal> map_;
  std::vector<bool> mapped_;
};

/*! \brief Reconstructs an e-graph from a trace document.
 *
 * External ids map onto freshly inserted e-nodes; because insertion is
 * deterministic, replaying a written trace reproduces the same class
 * partition and e-node multiset.
 */
inline egraph replay_trace( std::string const& text )
{
  /* pre-scan for the PI count so signature checking can engage */
  uint32_t pi_count = 0;
  {
    std::istringstream in( text );
    std::string line;
    while ( std::getline( in, line ) )
    {
      auto const tokens = detail::tokenize( line );
      if ( tokens.size() >= 3 && tokens[0] == "node" && tokens[2] == "PI" )
      {
        ++pi_count;
      }
    }
  }

  egraph eg( pi_count );
  std::unordered_map<uint32_t, eg_signal> ext;
  ext.emplace( 0, eg_signal( 0, false ) );

  auto parse_lit = [&]( uint32_t line_no, std::string tok ) -> eg_signal {
    bool phase = false;
    if ( !tok.empty() && tok.front() == '!' )
    {
      phase = true;
      tok = tok.substr( 1 );
    }
    uint32_t const id = static_cast<uint32_t>( std::stoul( tok ) );
    auto const it = ext.find( id );
    if ( it == ext.end() )
    {
      throw parse_error( line_no, "trace references undefined e-node " + tok );
    }
    return it->second ^ phase;
  };

  std::istringstream in( text );
  std::string line;
  uint32_t line_no = 0;
  while ( std::getline( in, line ) )
  {
    ++line_no;
    auto const tokens = detail::tokenize( line );
    if ( tokens.empty() || tokens[0][0] == '#' )
    {
      continue;
    }
    if ( tokens[0] == "node" )
    {
      if ( tokens.size() < 3 )
      {
        throw parse_error( line_no, "malformed node event" );
      }
      uint32_t const id = static_cast<uint32_t>( std::stoul( tokens[1] ) );
      if ( tokens[2] == "CONST0" )
      {
        ext[id] = eg_signal( 0, false );
      }
      else if ( tokens[2] == "PI" )
      {
        if ( tokens.size() != 4 )
        {
          throw parse_error( line_no, "PI event needs a name" );
        }
        ext[id] = eg_signal( eg.insert_pi( tokens[3] ), false );
      }
      else if ( tokens[2] == "AND" || tokens[2] == "XOR" )
      {
        if ( tokens.size() != 5 )
        {
          throw parse_error( line_no, "gate event needs two literals" );
        }
        ext[id] = eg.insert_gate( tokens[2] == "AND" ? gate_kind::and_gate : gate_kind::xor_gate,
                                  parse_lit( line_no, tokens[3] ), parse_lit( line_no, tokens[4] ) );
      }
      else
      {
        throw parse_error( line_no, "unknown node kind '" + tokens[2] + "'" );
      }
    }
    else if ( tokens[0] == "union" )
    {
      if ( tokens.size() != 3 && !( tokens.size() == 4 && tokens[3] == "inv" ) )
      {
        throw parse_error( line_no, "malformed union event" );
      }
      bool const inv = tokens.size() == 4;
      eg_signal const a = parse_lit( line_no, tokens[1] );
      eg_signal const b = parse_lit( line_no, tokens[2] );
      eg.merge( a, b ^ inv );
    }
    else if ( tokens[0] == "output" )
    {
      if ( tokens.size() != 3 )
      {
        throw parse_error( line_no, "malformed output event" );
      }
      eg.register_output( tokens[1], parse_lit( line_no, tokens[2] ) );
    }
    else
    {
      throw parse_error( line_no, "unknown trace event '" + tokens[0] + "'" );
    }
  }
  return eg;
}

} // namespace cuttrace
