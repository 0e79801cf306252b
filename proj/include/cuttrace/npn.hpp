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
  \file npn.hpp
  \brief Exhaustive NPN canonicalization for functions of up to 4 variables
*/

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>

#include "truth.hpp"

namespace cuttrace
{

/*! \brief An NPN transform: input permutation, input negations, output negation.
 *
 * apply( T, f ) = g with g(x) = f(y) ^ out_neg, where y[perm[i]] = x[i] ^ neg[i].
 */
struct npn_transform
{
  std::array<uint8_t, 4> perm{ 0, 1, 2, 3 };
  uint8_t input_neg{ 0 };
  bool output_neg{ false };
};

/*! \brief Applies an NPN transform to a truth table over `n` variables. */
inline truth6 npn_apply( npn_transform const& t, truth6 f, uint32_t n )
{
  truth6 g = 0;
  for ( uint32_t m = 0; m < ( 1u << n ); ++m )
  {
    uint32_t y = 0;
    for ( uint32_t i = 0; i < n; ++i )
    {
      uint32_t const bit = ( ( m >> i ) & 1u ) ^ ( ( t.input_neg >> i ) & 1u );
      y |= bit << t.perm[i];
    }
    if ( truth_bit( f, y ) )
    {
      g |= truth6( 1 ) << m;
    }
  }
  if ( t.output_neg )
  {
    g = truth_not( g, n );
  }
  return g;
}

struct npn_result
{
  truth6 canonical;
  npn_transform transform;
};

/*! \brief Exhaustive NPN canonicalization: minimum table over all
 * 2 * 2^n * n! transforms.  Limited to n <= 4.
 */
inline npn_result npn_canonicalize( truth6 f, uint32_t n )
{
  if ( n > 4u )
  {
    throw std::invalid_argument( "npn_canonicalize: only up to 4 variables supported" );
  }
  f &= truth_mask( n );

  npn_result best;
  best.canonical = truth_mask( n ) + 1; // larger than any n-variable table
  std::array<uint8_t, 4> idx{ 0, 1, 2, 3 };
  do
  {
    npn_transform t;
    for ( uint32_t i = 0; i < n; ++i )
    {
      t.perm[i] = idx[i];
    }
    for ( uint32_t neg = 0; neg < ( 1u << n ); ++neg )
    {
      t.input_neg = static_cast<uint8_t>( neg );
      t.output_neg = false;
      truth6 const g = npn_apply( t, f, n );
      if ( g < best.canonical )
      {
        best.canonical = g;
        best.transform = t;
      }
      truth6 const gn = truth_not( g, n );
      if ( gn < best.canonical )
      {
        best.canonical = gn;
        best.transform = t;
        best.transform.output_neg = true;
      }
    }
  } while ( std::next_permutation( idx.begin(), idx.begin() + n ) );
  return best;
}

} // namespace cuttrace
