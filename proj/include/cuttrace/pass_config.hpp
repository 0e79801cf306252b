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
  \file pass_config.hpp
  \brief Shared configuration and bookkeeping for the optimization passes
*/

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "xag.hpp"

namespace cuttrace
{

enum class record_policy : uint8_t
{
  best_only,
  all
};

struct pass_config
{
  /*! \brief Cut size for rewriting (bounded by the database arity). */
  uint32_t k_rewrite{ 4 };

  /*! \brief Cut size for ESOP balancing. */
  uint32_t k_balance{ 6 };

  /*! \brief Priority cuts kept per node. */
  uint32_t priority_limit{ 12 };

  /*! \brief Which candidates the tracer records for rewriting/resubstitution. */
  record_policy rewrite_policy{ record_policy::best_only };

  /*! \brief Which candidates the tracer records for balancing. */
  record_policy balance_policy{ record_policy::all };

  /*! \brief Safety bound on optimize-until-convergence rounds. */
  uint32_t max_flow_rounds{ 16 };

  /*! \brief Seed for randomized self-checks driven by the CLI. */
  uint64_t seed{ 1 };
};

/*! \brief One accepted replacement: which pass, at which node, saving how much. */
struct gain_report
{
  std::string pass;
  uint32_t node;
  int32_t gain; // MC saved, or MD levels saved for balancing
};

namespace detail
{

/*! \brief Exact AND-count change for replacing node `root` by `candidate`.
 *
 * Dereferences the root's cone (counting AND gates that die) and then
 * references the candidate's cone (counting AND gates that come alive);
 * shared structure cancels out, so the result equals the true MC delta.
 * The reference vector is modified and must be restored by the caller.
 */
inline int32_t replacement_gain( xag_network const& net, std::vector<uint32_t>& refs, uint32_t root,
                                 signal candidate )
{
  std::function<int32_t( uint32_t )> deref = [&]( uint32_t n ) -> int32_t {
    int32_t c = 0;
    for ( auto const f : { net.fanin0( n ), net.fanin1( n ) } )
    {
      if ( --refs[f.node()] == 0 && net.is_gate( f.node() ) )
      {
        c += ( net.is_and( f.node() ) ? 1 : 0 ) + deref( f.node() );
      }
    }
    return c;
  };
  std::function<int32_t( uint32_t )> ref = [&]( uint32_t n ) -> int32_t {
    int32_t c = 0;
    for ( auto const f : { net.fanin0( n ), net.fanin1( n ) } )
    {
      if ( refs[f.node()]++ == 0 && net.is_gate( f.node() ) )
      {
        c += ( net.is_and( f.node() ) ? 1 : 0 ) + ref( f.node() );
      }
    }
    return c;
  };

  int32_t const removed = ( net.is_and( root ) ? 1 : 0 ) + deref( root );
  int32_t added = 0;
  if ( net.is_gate( candidate.node() ) && refs[candidate.node()] == 0 )
  {
    added = ( net.is_and( candidate.node() ) ? 1 : 0 ) + ref( candidate.node() );
  }
  return removed - added;
}

/*! \brief True if `target` appears in the cone of `start` (used to reject
 * replacement candidates that would feed a node back into itself).
 */
inline bool cone_contains( xag_network const& net, uint32_t start, uint32_t target )
{
  if ( start == target )
  {
    return true;
  }
  std::vector<uint32_t> stack{ start };
  std::vector<bool> seen( net.size(), false );
  while ( !stack.empty() )
  {
    uint32_t const id = stack.back();
    stack.pop_back();
    if ( id == target )
    {
      return true;
    }
    if ( seen[id] || !net.is_gate( id ) )
    {
      continue;
    }
    seen[id] = true;
    stack.push_back( net.fanin0( id ).node() );
    stack.push_back( net.fanin1( id ).node() );
  }
  return false;
}

/*! \brief Live gates in topological (storage) order. */
inline std::vector<uint32_t> live_gates_topo( xag_network const& net )
{
  auto const live = live_nodes( net );
  std::vector<uint32_t> order;
  for ( uint32_t id = 1; id < net.size(); ++id )
  {
    if ( net.is_gate( id ) && live[id] )
    {
      order.push_back( id );
    }
  }
  return order;
}

} // namespace detail

} // namespace cuttrace
