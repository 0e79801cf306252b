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
  \file esop.hpp
  \brief Exclusive sum-of-products forms via pseudo-Kronecker search

  For every variable one of three expansions is chosen: positive Davio
  f = f0 ^ x (f0 ^ f1), negative Davio f = f1 ^ !x (f0 ^ f1), or Shannon
  f = !x f0 ^ x f1.  All 3^n per-variable assignments are evaluated; the
  result minimizes the maximum cube degree (which bounds the AND depth
  of the rebuilt cone), breaking ties by fewer cubes, then first found.
*/

#pragma once

#include <cstdint>
#include <vector>

#include "fragment.hpp"
#include "truth.hpp"

namespace cuttrace
{

/*! \brief A product term: `mask` marks care literals, `bits` their polarity. */
struct esop_cube
{
  uint8_t mask{ 0 };
  uint8_t bits{ 0 };

  uint32_t degree() const { return truth_popcount( mask ); }
  bool operator==( esop_cube const& other ) const = default;
};

namespace detail
{

enum class expansion : uint8_t
{
  positive_davio = 0,
  negative_davio = 1,
  shannon = 2
};

inline void collect_cubes( truth6 tt, uint32_t var, uint32_t n, std::vector<expansion> const& choice,
                           esop_cube prefix, std::vector<esop_cube>& out )
{
  if ( tt == 0 )
  {
    return;
  }
  if ( var == n )
  {
    out.push_back( prefix );
    return;
  }
  truth6 const f0 = cofactor0( tt, var ) & truth_mask( n );
  truth6 const f1 = cofactor1( tt, var ) & truth_mask( n );
  esop_cube pos = prefix;
  pos.mask |= 1u << var;
  pos.bits |= 1u << var;
  esop_cube neg = prefix;
  neg.mask |= 1u << var;

  switch ( choice[var] )
  {
  case expansion::positive_davio:
    collect_cubes( f0, var + 1, n, choice, prefix, out );
    collect_cubes( f0 ^ f1, var + 1, n, choice, pos, out );
    break;
  case expansion::negative_davio:
    collect_cubes( f1, var + 1, n, choice, prefix, out );
    collect_cubes( f0 ^ f1, var + 1, n, choice, neg, out );
    break;
  default:
    collect_cubes( f0, var + 1, n, choice, neg, out );
    collect_cubes( f1, var + 1, n, choice, pos, out );
    break;
  }
}

inline uint32_t max_degree( std::vector<esop_cube> const& cubes )
{
  uint32_t d = 0;
  for ( auto const& c : cubes )
  {
    d = std::max( d, c.degree() );
  }
  return d;
}

} // namespace detail

/*! \brief ESOP of `tt` over n <= 6 variables; constant zero gives no cubes. */
inline std::vector<esop_cube> esop_of( truth6 tt, uint32_t n )
{
  if ( n > max_truth_vars )
  {
    throw std::invalid_argument( "esop_of: more than 6 variables" );
  }
  tt &= truth_mask( n );

  std::vector<esop_cube> best;
  uint32_t best_degree = 0;
  bool have_best = false;
  uint32_t assignments = 1;
  for ( uint32_t i = 0; i < n; ++i )
  {
    assignments *= 3;
  }
  for ( uint32_t a = 0; a < assignments; ++a )
  {
    std::vector<detail::expansion> choice( n );
    uint32_t code = a;
    for ( uint32_t i = 0; i < n; ++i )
    {
      choice[i] = static_cast<detail::expansion>( code % 3 );
      code /= 3;
    }
    std::vector<esop_cube> cubes;
    detail::collect_cubes( tt, 0, n, choice, esop_cube{}, cubes );
    uint32_t const degree = detail::max_degree( cubes );
    if ( !have_best || degree < best_degree ||
         ( degree == best_degree && cubes.size() < best.size() ) )
    {
      best = std::move( cubes );
      best_degree = degree;
      have_best = true;
    }
  }
  return best;
}

/*! \brief Positive-polarity Reed-Muller form: all variables expanded with
 * positive Davio.  Unique for every function.
 */
inline std::vector<esop_cube> pprm_cubes( truth6 tt, uint32_t n )
{
  std::vector<detail::expansion> choice( n, detail::expansion::positive_davio );
  std::vector<esop_cube> cubes;
  detail::collect_cubes( tt & truth_mask( n ), 0, n, choice, esop_cube{}, cubes );
  return cubes;
}

/*! \brief XOR of a cube list, for checking ESOP correctness. */
inline truth6 esop_function( std::vector<esop_cube> const& cubes, uint32_t n )
{
  truth6 result = 0;
  for ( auto const& c : cubes )
  {
    truth6 term = truth_mask( n );
    for ( uint32_t i = 0; i < n; ++i )
    {
      if ( ( c.mask >> i ) & 1u )
      {
        truth6 const v = truth_var( i ) & truth_mask( n );
        term &= ( ( c.bits >> i ) & 1u ) ? v : ~v & truth_mask( n );
      }
    }
    result ^= term;
  }
  return result;
}

/*! \brief Realizes a cube list as a fragment: balanced AND tree per cube,
 * cubes combined by a (free) XOR tree.  The fragment's AND depth is
 * exactly ceil(log2(max cube degree)), or 0 when all degrees are at most 1.
 */
inline xag_fragment build_esop_fragment( std::vector<esop_cube> const& cubes, uint32_t num_leaves )
{
  xag_fragment frag;
  frag.num_leaves = num_leaves;

  std::vector<fragment_ref> roots;
  for ( auto const& c : cubes )
  {
    std::vector<fragment_ref> literals;
    for ( uint32_t i = 0; i < num_leaves; ++i )
    {
      if ( ( c.mask >> i ) & 1u )
      {
        literals.push_back( fragment_ref::make_leaf( i, ( ( c.bits >> i ) & 1u ) == 0u ) );
      }
    }
    if ( literals.empty() )
    {
      roots.push_back( fragment_ref::make_constant( true ) );
      continue;
    }
    while ( literals.size() > 1 )
    {
      std::vector<fragment_ref> next;
      for ( size_t i = 0; i + 1 < literals.size(); i += 2 )
      {
        frag.gates.push_back( fragment_gate{ gate_kind::and_gate, { literals[i], literals[i + 1] } } );
        next.push_back( fragment_ref::make_gate( static_cast<uint32_t>( frag.gates.size() - 1 ) ) );
      }
      if ( literals.size() % 2 )
      {
        next.push_back( literals.back() );
      }
      literals = std::move( next );
    }
    roots.push_back( literals[0] );
  }

  if ( roots.empty() )
  {
    frag.output = fragment_ref::make_constant( false );
    return frag;
  }
  while ( roots.size() > 1 )
  {
    std::vector<fragment_ref> next;
    for ( size_t i = 0; i + 1 < roots.size(); i += 2 )
    {
      frag.gates.push_back( fragment_gate{ gate_kind::xor_gate, { roots[i], roots[i + 1] } } );
      next.push_back( fragment_ref::make_gate( static_cast<uint32_t>( frag.gates.size() - 1 ) ) );
    }
    if ( roots.size() % 2 )
    {
      next.push_back( roots.back() );
    }
    roots = std::move( next );
  }
  frag.output = roots[0];
  return frag;
}

/*! \brief AND depth of a fragment (XOR gates are free). */
inline uint32_t fragment_depth( xag_fragment const& frag )
{
  std::vector<uint32_t> depth( frag.gates.size(), 0 );
  auto const of = [&]( fragment_ref const& r ) -> uint32_t {
    return r.kind == fragment_ref::target::gate ? depth[r.index] : 0u;
  };
  uint32_t out = 0;
  for ( size_t i = 0; i < frag.gates.size(); ++i )
  {
    depth[i] = std::max( of( frag.gates[i].fanin[0] ), of( frag.gates[i].fanin[1] ) ) +
               ( frag.gates[i].kind == gate_kind::and_gate ? 1u : 0u );
  }
  out = of( frag.output );
  return out;
}

} // namespace cuttrace
