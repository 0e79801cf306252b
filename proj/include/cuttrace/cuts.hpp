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
  \file cuts.hpp
  \brief k-feasible priority cut enumeration with local truth tables
*/

#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "truth.hpp"
#include "xag.hpp"

namespace cuttrace
{

/*! \brief A cut: root node, sorted leaves, and the root's function over them.
 *
 * Every root-to-PI path intersects the leaves, and each leaf lies on at
 * least one such path.  The table has 2^|leaves| valid bits; bit i is the
 * root's value when the leaves take the binary expansion of i in sorted
 * leaf order.
 */
struct cut
{
  std::vector<uint32_t> leaves;
  truth6 table{ 0 };
};

/*! \brief Per-node cut sets of a network. */
struct network_cuts
{
  uint32_t cut_size{ 0 };
  uint32_t cut_limit{ 0 };
  std::vector<std::vector<cut>> cuts; // indexed by node id

  std::vector<cut> const& at( uint32_t node ) const { return cuts[node]; }
};

namespace detail
{

/* ranking: fewer leaves first, then lexicographically smaller leaf vector */
inline bool cut_rank_less( cut const& a, cut const& b )
{
  if ( a.leaves.size() != b.leaves.size() )
  {
    return a.leaves.size() < b.leaves.size();
  }
  return a.leaves < b.leaves;
}

} // namespace detail

/*! \brief Computes a cut's function by exhaustive cone simulation.
 *
 * Evaluation stops at every leaf, so the result is well defined even
 * when a leaf also lies inside another leaf's cone.  Raises if the cone
 * below the root escapes the leaves (reaches a PI that is not a leaf),
 * i.e. the cut is malformed.
 */
inline truth6 cut_function( xag_network const& net, uint32_t root, std::vector<uint32_t> const& leaves )
{
  if ( leaves.size() > max_truth_vars )
  {
    throw std::invalid_argument( "cut_function: more than 6 leaves" );
  }
  std::map<uint32_t, truth6> values;
  values.emplace( 0, 0 );
  for ( size_t i = 0; i < leaves.size(); ++i )
  {
    values.emplace( leaves[i], truth_var( static_cast<uint32_t>( i ) ) );
  }

  std::function<truth6( uint32_t )> eval = [&]( uint32_t id ) -> truth6 {
    if ( auto const it = values.find( id ); it != values.end() )
    {
      return it->second;
    }
    if ( !net.is_gate( id ) )
    {
      throw std::invalid_argument( "cut_function: cone escapes the leaves (malformed cut)" );
    }
    signal const f0 = net.fanin0( id );
    signal const f1 = net.fanin1( id );
    truth6 t0 = eval( f0.node() );
    truth6 t1 = eval( f1.node() );
    if ( f0.phase() )
    {
      t0 = ~t0;
    }
    if ( f1.phase() )
    {
      t1 = ~t1;
    }
    truth6 const t = net.is_and( id ) ? ( t0 & t1 ) : ( t0 ^ t1 );
    values.emplace( id, t );
    return t;
  };
  uint32_t const n = static_cast<uint32_t>( leaves.size() );
  return eval( root ) & truth_mask( n );
}

/*! \brief Enumerates k-feasible priority cuts for every node.
 *
 * Gate cuts are formed by merging the fanin cut sets; leaf sets larger
 * than k are discarded, duplicates removed, and the `priority_limit`
 * best kept by the (fewer leaves, lexicographic) ranking.  The trivial
 * cut {node} is appended afterwards and does not count against the
 * limit.  Constants carry a single leafless cut.  Kept cuts get their
 * tables from cone simulation.
 */
inline network_cuts enumerate_cuts( xag_network const& net, uint32_t k, uint32_t priority_limit )
{
  if ( k < 2u || k > max_truth_vars )
  {
    throw std::invalid_argument( "enumerate_cuts: cut size must be between 2 and 6" );
  }
  if ( priority_limit < 1u )
  {
    throw std::invalid_argument( "enumerate_cuts: priority limit must be at least 1" );
  }

  network_cuts result;
  result.cut_size = k;
  result.cut_limit = priority_limit;
  result.cuts.resize( net.size() );

  result.cuts[0].push_back( cut{ {}, 0 } ); // constant zero
  for ( uint32_t id = 1; id < net.size(); ++id )
  {
    if ( net.is_pi( id ) )
    {
      result.cuts[id].push_back( cut{ { id }, 0b10 } );
      continue;
    }
    if ( !net.is_gate( id ) )
    {
      continue;
    }
    signal const f0 = net.fanin0( id );
    signal const f1 = net.fanin1( id );

    std::vector<cut> merged;
    for ( auto const& c0 : result.cuts[f0.node()] )
    {
      for ( auto const& c1 : result.cuts[f1.node()] )
      {
        std::vector<uint32_t> leaves;
        std::set_union( c0.leaves.begin(), c0.leaves.end(), c1.leaves.begin(), c1.leaves.end(),
                        std::back_inserter( leaves ) );
        if ( leaves.size() > k )
        {
          continue;
        }
        merged.push_back( cut{ std::move( leaves ), 0 } );
      }
    }
    std::sort( merged.begin(), merged.end(), detail::cut_rank_less );
    merged.erase( std::unique( merged.begin(), merged.end(),
                               []( cut const& a, cut const& b ) { return a.leaves == b.leaves; } ),
                  merged.end() );
    if ( merged.size() > priority_limit )
    {
      merged.resize( priority_limit );
    }
    for ( auto& c : merged )
    {
      c.table = cut_function( net, id, c.leaves );
    }
    merged.push_back( cut{ { id }, 0b10 } );
    result.cuts[id] = std::move( merged );
  }
  return result;
}

} // namespace cuttrace
