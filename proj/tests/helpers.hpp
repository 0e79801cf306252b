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
  \file helpers.hpp
  \brief Shared test utilities: fixture circuits, random networks, reference oracles
*/

#pragma once

#include <map>
#include <random>
#include <vector>

#include <cuttrace/xag.hpp>

namespace cuttrace::test
{

/*! \brief Full adder in the textbook shape: two AND gates, MD 1. */
inline xag_network full_adder()
{
  xag_network net;
  auto const a = net.create_pi( "a" );
  auto const b = net.create_pi( "b" );
  auto const cin = net.create_pi( "cin" );
  auto const axb = net.create_xor( a, b );
  auto const sum = net.create_xor( axb, cin );
  auto const and0 = net.create_and( a, b );
  auto const and1 = net.create_and( axb, cin );
  auto const carry = net.create_xor( and0, and1 );
  net.create_po( "sum", sum );
  net.create_po( "cout", carry );
  return net;
}

/*! \brief Chain of AND gates: AND(AND(AND(a,b),c),d)... */
inline xag_network and_chain( uint32_t inputs )
{
  xag_network net;
  auto s = net.create_pi( "x0" );
  for ( uint32_t i = 1; i < inputs; ++i )
  {
    s = net.create_and( s, net.create_pi( "x" + std::to_string( i ) ) );
  }
  net.create_po( "y", s );
  return net;
}

/*! \brief Random network generator with reproducible structure. */
inline xag_network random_network( uint64_t seed, uint32_t num_pis, uint32_t num_gates,
                                   uint32_t num_outputs = 2 )
{
  std::mt19937_64 rng( seed );
  xag_network net;
  std::vector<signal> pool;
  for ( uint32_t i = 0; i < num_pis; ++i )
  {
    pool.push_back( net.create_pi( "x" + std::to_string( i ) ) );
  }
  uint32_t gates = 0;
  uint32_t attempts = 0;
  while ( gates < num_gates && attempts < num_gates * 40u )
  {
    ++attempts;
    auto const pick = [&]() {
      signal s = pool[rng() % pool.size()];
      return ( rng() & 1u ) ? !s : s;
    };
    signal const a = pick();
    signal const b = pick();
    uint32_t const before = net.size();
    signal const s = ( rng() % 100u ) < 55u ? net.create_and( a, b ) : net.create_xor( a, b );
    if ( net.size() > before )
    {
      pool.push_back( s );
      ++gates;
    }
  }
  /* outputs biased toward the latest nodes so most of the pool stays live */
  for ( uint32_t i = 0; i < num_outputs; ++i )
  {
    signal s;
    if ( i == 0 && gates > 0 )
    {
      s = pool.back();
    }
    else
    {
      s = pool[pool.size() - 1u - ( rng() % std::min<size_t>( pool.size(), 5u + i ) )];
    }
    net.create_po( "y" + std::to_string( i ), ( rng() & 1u ) ? !s : s );
  }
  return net;
}

/*! \brief Independent multiplicative-depth reference: direct recursion with memoization. */
inline uint32_t reference_md( xag_network const& net )
{
  std::map<uint32_t, uint32_t> memo;
  std::function<uint32_t( uint32_t )> level = [&]( uint32_t id ) -> uint32_t {
    if ( auto const it = memo.find( id ); it != memo.end() )
    {
      return it->second;
    }
    uint32_t result = 0;
    if ( net.is_gate( id ) )
    {
      uint32_t const d = net.is_and( id ) ? 1u : 0u;
      result = d + std::max( level( net.fanin0( id ).node() ), level( net.fanin1( id ).node() ) );
    }
    memo.emplace( id, result );
    return result;
  };
  uint32_t md = 0;
  for ( auto const& [name, s] : net.outputs() )
  {
    (void)name;
    md = std::max( md, level( s.node() ) );
  }
  return md;
}

/*! \brief Naive single-pattern evaluation, recursive, no bit parallelism. */
inline bool naive_eval( xag_network const& net, signal s, std::vector<bool> const& assignment )
{
  std::function<bool( uint32_t )> eval = [&]( uint32_t id ) -> bool {
    if ( net.is_constant( id ) )
    {
      return false;
    }
    if ( net.is_pi( id ) )
    {
      return assignment[net.pi_index( id )];
    }
    bool const a = eval( net.fanin0( id ).node() ) ^ net.fanin0( id ).phase();
    bool const b = eval( net.fanin1( id ).node() ) ^ net.fanin1( id ).phase();
    return net.is_and( id ) ? ( a && b ) : ( a != b );
  };
  return eval( s.node() ) ^ s.phase();
}

} // namespace cuttrace::test
