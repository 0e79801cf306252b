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
  \file xag.hpp
  \brief XOR-AND graph with complemented edges, structural hashing,
         multiplicative depth/complexity statistics, and simulation
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cuttrace
{

enum class gate_kind : uint8_t
{
  constant = 0,
  pi,
  and_gate,
  xor_gate
};

/*! \brief An edge into a node: node index plus complement flag.
 *
 * Complemented edges implement free inverters: a NOT never occupies a
 * node of its own.  Complementation is an involution by construction.
 */
struct signal
{
  uint32_t data{ 0 };

  signal() = default;
  signal( uint32_t node, bool phase ) : data( ( node << 1 ) | ( phase ? 1u : 0u ) ) {}

  uint32_t node() const { return data >> 1; }
  bool phase() const { return ( data & 1u ) != 0u; }

  signal operator!() const
  {
    signal s;
    s.data = data ^ 1u;
    return s;
  }

  signal operator^( bool p ) const
  {
    signal s;
    s.data = data ^ ( p ? 1u : 0u );
    return s;
  }

  bool operator==( signal const& other ) const { return data == other.data; }
  bool operator!=( signal const& other ) const { return data != other.data; }
  bool operator<( signal const& other ) const { return data < other.data; }
};

struct network_stats
{
  /*! \brief Multiplicative depth: max AND count over all PI-to-output paths. */
  uint32_t md{ 0 };

  /*! \brief Multiplicative complexity: number of AND gates in the live cone. */
  uint32_t mc{ 0 };

  /*! \brief Live gates (AND and XOR). */
  uint32_t node_count{ 0 };

  /*! \brief Per-node multiplicative level (indexed by node id, dead nodes included). */
  std::vector<uint32_t> level;

  /*! \brief Liveness flag per node (reachable from some output). */
  std::vector<bool> live;
};

/*! \brief XOR-AND graph.
 *
 * Nodes are stored in creation order, which is always a valid
 * topological order: substitution never patches fanins in place but
 * rebuilds downstream nodes, so edges only ever point backwards.
 * Node 0 is the constant-zero node; constant one is its complement.
 *
 * Gate creation normalizes operands (sorted by node id then phase,
 * XOR operand complements pushed to the output) and folds trivial
 * cases, then applies structural hashing.
 */
class xag_network
{
public:
  struct node_type
  {
    gate_kind kind{ gate_kind::constant };
    signal fanin[2];
  };

  xag_network()
  {
    nodes_.push_back( node_type{} ); // constant zero
  }

  signal get_constant( bool value = false ) const { return signal( 0, value ); }

  signal create_pi( std::string const& name )
  {
    uint32_t const id = static_cast<uint32_t>( nodes_.size() );
    node_type n;
    n.kind = gate_kind::pi;
    nodes_.push_back( n );
    pis_.push_back( id );
    pi_names_.push_back( name );
    return signal( id, false );
  }

  signal create_and( signal a, signal b ) { return create_gate( gate_kind::and_gate, a, b ); }
  signal create_xor( signal a, signal b ) { return create_gate( gate_kind::xor_gate, a, b ); }

  /*! \brief Adds a gate with normalization, folding, and structural hashing. */
  signal create_gate( gate_kind kind, signal a, signal b )
  {
    if ( a.node() >= nodes_.size() || b.node() >= nodes_.size() )
    {
      throw std::invalid_argument( "create_gate: operand refers to a non-existing node" );
    }

    if ( kind == gate_kind::and_gate )
    {
      if ( a == b )
      {
        return a;
      }
      if ( a == !b )
      {
        return get_constant( false );
      }
      if ( a.node() == 0 )
      {
        return a.phase() ? b : get_constant( false );
      }
      if ( b.node() == 0 )
      {
        return b.phase() ? a : get_constant( false );
      }
      if ( b < a )
      {
        std::swap( a, b );
      }
      return strash( kind, a, b, false );
    }

    /* XOR */
    if ( a == b )
    {
      return get_constant( false );
    }
    if ( a == !b )
    {
      return get_constant( true );
    }
    if ( a.node() == 0 )
    {
      return b ^ a.phase();
    }
    if ( b.node() == 0 )
    {
      return a ^ b.phase();
    }
    bool const out = a.phase() ^ b.phase();
    a = a ^ a.phase();
    b = b ^ b.phase();
    if ( b < a )
    {
      std::swap( a, b );
    }
    return strash( gate_kind::xor_gate, a, b, out );
  }

  void create_po( std::string const& name, signal s )
  {
    if ( s.node() >= nodes_.size() )
    {
      throw std::invalid_argument( "create_po: signal refers to a non-existing node" );
    }
    outputs_.emplace_back( name, s );
  }

  uint32_t size() const { return static_cast<uint32_t>( nodes_.size() ); }
  uint32_t num_pis() const { return static_cast<uint32_t>( pis_.size() ); }
  uint32_t num_pos() const { return static_cast<uint32_t>( outputs_.size() ); }

  node_type const& node( uint32_t id ) const { return nodes_[id]; }
  gate_kind kind_of( uint32_t id ) const { return nodes_[id].kind; }
  bool is_constant( uint32_t id ) const { return nodes_[id].kind == gate_kind::constant; }
  bool is_pi( uint32_t id ) const { return nodes_[id].kind == gate_kind::pi; }
  bool is_and( uint32_t id ) const { return nodes_[id].kind == gate_kind::and_gate; }
  bool is_xor( uint32_t id ) const { return nodes_[id].kind == gate_kind::xor_gate; }
  bool is_gate( uint32_t id ) const { return is_and( id ) || is_xor( id ); }

  signal fanin0( uint32_t id ) const { return nodes_[id].fanin[0]; }
  signal fanin1( uint32_t id ) const { return nodes_[id].fanin[1]; }

  std::vector<uint32_t> const& pis() const { return pis_; }
  std::string const& pi_name( uint32_t index ) const { return pi_names_[index]; }
  std::vector<std::string> const& pi_names() const { return pi_names_; }
  std::vector<std::pair<std::string, signal>> const& outputs() const { return outputs_; }
  std::pair<std::string, signal> const& output( uint32_t index ) const { return outputs_[index]; }

  /*! \brief Index of a PI node within the PI list (node must be a PI). */
  uint32_t pi_index( uint32_t id ) const
  {
    auto const it = std::find( pis_.begin(), pis_.end(), id );
    return static_cast<uint32_t>( it - pis_.begin() );
  }

  /*! \brief Marks the current storage size; rollback() removes nodes added after it. */
  uint32_t checkpoint() const { return size(); }

  /*! \brief Removes all nodes created after the checkpoint.
   *
   * Only safe while the removed nodes are unreferenced (no substitution
   * or output creation happened in between).
   */
  void rollback( uint32_t mark )
  {
    while ( nodes_.size() > mark )
    {
      uint32_t const id = static_cast<uint32_t>( nodes_.size() - 1 );
      strash_.erase( strash_key( nodes_[id].kind, nodes_[id].fanin[0], nodes_[id].fanin[1] ) );
      nodes_.pop_back();
    }
  }

  /*! \brief Redirects all uses of node `old_node` to `replacement`.
   *
   * Downstream consumers are re-created through `create_gate` instead of
   * being patched, so storage order remains topological and hashing stays
   * consistent.  For every node that ends up aliased to another signal,
   * `on_alias(aliased_node, substitute_signal)` is invoked (used to keep
   * trace bookkeeping in sync); pass nullptr when not needed.
   */
  void substitute( uint32_t old_node, signal replacement,
                   std::function<void( uint32_t, signal )> const& on_alias = nullptr )
  {
    if ( old_node >= nodes_.size() || replacement.node() >= nodes_.size() )
    {
      throw std::invalid_argument( "substitute: unknown node" );
    }
    std::unordered_map<uint32_t, signal> replace;
    replace.emplace( old_node, replacement );
    if ( is_gate( old_node ) )
    {
      strash_.erase( strash_key( nodes_[old_node].kind, nodes_[old_node].fanin[0], nodes_[old_node].fanin[1] ) );
    }
    if ( on_alias )
    {
      on_alias( old_node, replacement );
    }

    auto const resolve = [&]( signal s ) -> signal {
      auto const it = replace.find( s.node() );
      return it == replace.end() ? s : ( it->second ^ s.phase() );
    };

    uint32_t const limit = size();
    for ( uint32_t id = old_node + 1; id < limit; ++id )
    {
      if ( !is_gate( id ) )
      {
        continue;
      }
      signal const f0 = resolve( nodes_[id].fanin[0] );
      signal const f1 = resolve( nodes_[id].fanin[1] );
      if ( f0 == nodes_[id].fanin[0] && f1 == nodes_[id].fanin[1] )
      {
        continue;
      }
      signal const s = create_gate( nodes_[id].kind, f0, f1 );
      if ( s != signal( id, false ) )
      {
        replace.emplace( id, s );
        strash_.erase( strash_key( nodes_[id].kind, nodes_[id].fanin[0], nodes_[id].fanin[1] ) );
        if ( on_alias )
        {
          on_alias( id, s );
        }
      }
    }

    for ( auto& [name, s] : outputs_ )
    {
      (void)name;
      s = resolve( s );
    }
  }

private:
  static uint64_t strash_key( gate_kind kind, signal a, signal b )
  {
    return ( static_cast<uint64_t>( kind == gate_kind::xor_gate ) << 63 ) |
           ( static_cast<uint64_t>( a.data ) << 31 ) | b.data;
  }

  signal strash( gate_kind kind, signal a, signal b, bool out )
  {
    uint64_t const key = strash_key( kind, a, b );
    auto const it = strash_.find( key );
    if ( it != strash_.end() )
    {
      return signal( it->second, out );
    }
    uint32_t const id = static_cast<uint32_t>( nodes_.size() );
    node_type n;
    n.kind = kind;
    n.fanin[0] = a;
    n.fanin[1] = b;
    nodes_.push_back( n );
    strash_.emplace( key, id );
    return signal( id, out );
  }

  std::vector<node_type> nodes_;
  std::vector<uint32_t> pis_;
  std::vector<std::string> pi_names_;
  std::vector<std::pair<std::string, signal>> outputs_;
  std::unordered_map<uint64_t, uint32_t> strash_;
};

/*! \brief Liveness flags: nodes reachable from some output. */
inline std::vector<bool> live_nodes( xag_network const& net )
{
  std::vector<bool> live( net.size(), false );
  std::vector<uint32_t> stack;
  for ( auto const& [name, s] : net.outputs() )
  {
    (void)name;
    if ( !live[s.node()] )
    {
      live[s.node()] = true;
      stack.push_back( s.node() );
    }
  }
  while ( !stack.empty() )
  {
    uint32_t const id = stack.back();
    stack.pop_back();
    if ( !net.is_gate( id ) )
    {
      continue;
    }
    for ( auto const f : { net.fanin0( id ), net.fanin1( id ) } )
    {
      if ( !live[f.node()] )
      {
        live[f.node()] = true;
        stack.push_back( f.node() );
      }
    }
  }
  return live;
}

/*! \brief Computes multiplicative depth and complexity.
 *
 * The level of a node follows the recursion level(v) = d(v) + max over
 * fanins, with d(v) = 1 exactly for AND gates.  MD is the maximum level
 * over output signals; MC counts AND gates in the live cone only.
 */
inline network_stats compute_stats( xag_network const& net )
{
  network_stats st;
  st.level.assign( net.size(), 0 );
  st.live = live_nodes( net );
  for ( uint32_t id = 0; id < net.size(); ++id )
  {
    if ( !net.is_gate( id ) )
    {
      continue;
    }
    uint32_t const l0 = st.level[net.fanin0( id ).node()];
    uint32_t const l1 = st.level[net.fanin1( id ).node()];
    st.level[id] = std::max( l0, l1 ) + ( net.is_and( id ) ? 1u : 0u );
    if ( st.live[id] )
    {
      ++st.node_count;
      if ( net.is_and( id ) )
      {
        ++st.mc;
      }
    }
  }
  for ( auto const& [name, s] : net.outputs() )
  {
    (void)name;
    st.md = std::max( st.md, st.level[s.node()] );
  }
  return st;
}

/*! \brief Fanout reference counts (fanin edges from live gates plus output references). */
inline std::vector<uint32_t> reference_counts( xag_network const& net )
{
  std::vector<uint32_t> refs( net.size(), 0 );
  auto const live = live_nodes( net );
  for ( uint32_t id = 0; id < net.size(); ++id )
  {
    if ( !net.is_gate( id ) || !live[id] )
    {
      continue;
    }
    ++refs[net.fanin0( id ).node()];
    ++refs[net.fanin1( id ).node()];
  }
  for ( auto const& [name, s] : net.outputs() )
  {
    (void)name;
    ++refs[s.node()];
  }
  return refs;
}

/*! \brief Bit-parallel simulation.
 *
 * `patterns[i]` holds the word blocks for PI i; all PIs must provide the
 * same number of blocks.  Returns one block vector per output.
 */
inline std::vector<std::vector<uint64_t>> simulate( xag_network const& net,
                                                    std::vector<std::vector<uint64_t>> const& patterns )
{
  if ( patterns.size() != net.num_pis() )
  {
    throw std::invalid_argument( "simulate: pattern count does not match PI count" );
  }
  size_t const blocks = patterns.empty() ? 1u : patterns.front().size();
  for ( auto const& p : patterns )
  {
    if ( p.size() != blocks )
    {
      throw std::invalid_argument( "simulate: ragged pattern block" );
    }
  }

  std::vector<std::vector<uint64_t>> values( net.size(), std::vector<uint64_t>( blocks, 0 ) );
  for ( uint32_t i = 0; i < net.num_pis(); ++i )
  {
    values[net.pis()[i]] = patterns[i];
  }
  auto const fetch = [&]( signal s, size_t b ) {
    uint64_t const v = values[s.node()][b];
    return s.phase() ? ~v : v;
  };
  for ( uint32_t id = 1; id < net.size(); ++id )
  {
    if ( !net.is_gate( id ) )
    {
      continue;
    }
    for ( size_t b = 0; b < blocks; ++b )
    {
      uint64_t const a = fetch( net.fanin0( id ), b );
      uint64_t const c = fetch( net.fanin1( id ), b );
      values[id][b] = net.is_and( id ) ? ( a & c ) : ( a ^ c );
    }
  }

  std::vector<std::vector<uint64_t>> result;
  result.reserve( net.num_pos() );
  for ( auto const& [name, s] : net.outputs() )
  {
    (void)name;
    std::vector<uint64_t> row( blocks );
    for ( size_t b = 0; b < blocks; ++b )
    {
      row[b] = fetch( s, b );
    }
    result.push_back( std::move( row ) );
  }
  return result;
}

/*! \brief Exhaustive input block for networks with few PIs: all 2^n assignments. */
inline std::vector<std::vector<uint64_t>> exhaustive_patterns( uint32_t num_pis )
{
  size_t const blocks = num_pis <= 6u ? 1u : ( size_t( 1 ) << ( num_pis - 6u ) );
  std::vector<std::vector<uint64_t>> patterns( num_pis, std::vector<uint64_t>( blocks ) );
  for ( uint32_t i = 0; i < num_pis; ++i )
  {
    for ( size_t b = 0; b < blocks; ++b )
    {
      if ( i < 6u )
      {
        constexpr uint64_t proj[6] = { 0xaaaaaaaaaaaaaaaaull, 0xccccccccccccccccull,
                                       0xf0f0f0f0f0f0f0f0ull, 0xff00ff00ff00ff00ull,
                                       0xffff0000ffff0000ull, 0xffffffff00000000ull };
        patterns[i][b] = proj[i];
      }
      else
      {
        patterns[i][b] = ( ( b >> ( i - 6u ) ) & 1u ) ? ~uint64_t( 0 ) : 0u;
      }
    }
  }
  return patterns;
}

/*! \brief Masks the last block so that only valid minterm bits are compared. */
inline void mask_last_block( std::vector<uint64_t>& row, uint32_t num_pis )
{
  if ( num_pis < 6u && !row.empty() )
  {
    row.back() &= ( uint64_t( 1 ) << ( 1u << num_pis ) ) - 1;
  }
}

/*! \brief Functional equivalence check.
 *
 * Requires matching PI names and output names.  Exhaustive for up to 12
 * PIs; beyond that, compares 65,536 seeded random patterns and is
 * therefore probabilistic.
 */
inline bool equivalent( xag_network const& a, xag_network const& b, uint64_t seed = 1 )
{
  if ( a.num_pis() != b.num_pis() || a.num_pos() != b.num_pos() )
  {
    throw std::invalid_argument( "equivalent: interface mismatch" );
  }

  /* map b's PI order onto a's by name */
  std::vector<uint32_t> pi_map( a.num_pis() );
  for ( uint32_t i = 0; i < a.num_pis(); ++i )
  {
    bool found = false;
    for ( uint32_t j = 0; j < b.num_pis(); ++j )
    {
      if ( a.pi_name( i ) == b.pi_name( j ) )
      {
        pi_map[i] = j;
        found = true;
        break;
      }
    }
    if ( !found )
    {
      throw std::invalid_argument( "equivalent: PI name mismatch: " + a.pi_name( i ) );
    }
  }
  for ( uint32_t i = 0; i < a.num_pos(); ++i )
  {
    if ( a.output( i ).first != b.output( i ).first )
    {
      throw std::invalid_argument( "equivalent: output name mismatch: " + a.output( i ).first );
    }
  }

  std::vector<std::vector<uint64_t>> pat_a;
  if ( a.num_pis() <= 12u )
  {
    pat_a = exhaustive_patterns( a.num_pis() );
  }
  else
  {
    std::mt19937_64 rng( seed );
    size_t const blocks = 65536u / 64u;
    pat_a.assign( a.num_pis(), std::vector<uint64_t>( blocks ) );
    for ( auto& row : pat_a )
    {
      for ( auto& w : row )
      {
        w = rng();
      }
    }
  }
  std::vector<std::vector<uint64_t>> pat_b( b.num_pis() );
  for ( uint32_t i = 0; i < a.num_pis(); ++i )
  {
    pat_b[pi_map[i]] = pat_a[i];
  }

  auto out_a = simulate( a, pat_a );
  auto out_b = simulate( b, pat_b );
  uint64_t const mask = a.num_pis() < 6u ? ( uint64_t( 1 ) << ( 1u << a.num_pis() ) ) - 1 : ~uint64_t( 0 );
  for ( uint32_t i = 0; i < a.num_pos(); ++i )
  {
    for ( size_t w = 0; w < out_a[i].size(); ++w )
    {
      if ( ( ( out_a[i][w] ^ out_b[i][w] ) & mask ) != 0u )
      {
        return false;
      }
    }
  }
  return true;
}

/*! \brief Rebuilds the network keeping only the live cone.
 *
 * All PIs are preserved (interface stability); gates are re-created in
 * topological order, so the result is compact and deterministic.  The
 * optional `node_map` receives, for every old live node, the signal it
 * maps to in the result.
 */
inline xag_network cleanup( xag_network const& net, std::vector<signal>* node_map = nullptr )
{
  xag_network result;
  std::vector<signal> map( net.size(), signal( 0, false ) );
  map[0] = result.get_constant( false );
  for ( uint32_t i = 0; i < net.num_pis(); ++i )
  {
    map[net.pis()[i]] = result.create_pi( net.pi_name( i ) );
  }
  auto const live = live_nodes( net );
  for ( uint32_t id = 1; id < net.size(); ++id )
  {
    if ( !net.is_gate( id ) || !live[id] )
    {
      continue;
    }
    signal const f0 = map[net.fanin0( id ).node()] ^ net.fanin0( id ).phase();
    signal const f1 = map[net.fanin1( id ).node()] ^ net.fanin1( id ).phase();
    map[id] = result.create_gate( net.kind_of( id ), f0, f1 );
  }
  for ( auto const& [name, s] : net.outputs() )
  {
    result.create_po( name, map[s.node()] ^ s.phase() );
  }
  if ( node_map )
  {
    *node_map = std::move( map );
  }
  return result;
}

} // namespace cuttrace
