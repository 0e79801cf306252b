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
  \file truth.hpp
  \brief Truth tables over up to 6 variables, packed into a 64-bit word
*/

#pragma once

#include <array>
#include <bit>
#include <cstdint>

namespace cuttrace
{

/*! \brief Truth table over at most 6 variables, bit i = f(minterm i). */
using truth6 = uint64_t;

inline constexpr uint32_t max_truth_vars = 6u;

/*! \brief Bit mask covering all 2^n minterms. */
inline constexpr truth6 truth_mask( uint32_t num_vars )
{
  return num_vars == 6u ? ~truth6( 0 ) : ( ( truth6( 1 ) << ( 1u << num_vars ) ) - 1 );
}

/*! \brief Truth table of variable `var` (projection function). */
inline constexpr truth6 truth_var( uint32_t var )
{
  constexpr std::array<truth6, 6> proj = {
      0xaaaaaaaaaaaaaaaaull, 0xccccccccccccccccull, 0xf0f0f0f0f0f0f0f0ull,
      0xff00ff00ff00ff00ull, 0xffff0000ffff0000ull, 0xffffffff00000000ull };
  return proj[var];
}

inline constexpr truth6 truth_not( truth6 t, uint32_t num_vars )
{
  return ~t & truth_mask( num_vars );
}

inline constexpr bool truth_bit( truth6 t, uint32_t minterm )
{
  return ( t >> minterm ) & 1u;
}

/*! \brief Negative cofactor: variable `var` fixed to 0, result padded over all vars. */
inline truth6 cofactor0( truth6 t, uint32_t var )
{
  truth6 const lo = t & ~truth_var( var );
  return lo | ( lo << ( 1u << var ) );
}

/*! \brief Positive cofactor: variable `var` fixed to 1. */
inline truth6 cofactor1( truth6 t, uint32_t var )
{
  truth6 const hi = t & truth_var( var );
  return hi | ( hi >> ( 1u << var ) );
}

/*! \brief True iff `t` does not depend on variable `var`. */
inline bool truth_independent_of( truth6 t, uint32_t num_vars, uint32_t var )
{
  return ( ( cofactor0( t, var ) ^ cofactor1( t, var ) ) & truth_mask( num_vars ) ) == 0u;
}

/*! \brief Pads a table over `from_vars` variables to one over `to_vars` variables. */
inline truth6 truth_extend( truth6 t, uint32_t from_vars, uint32_t to_vars )
{
  for ( auto v = from_vars; v < to_vars; ++v )
  {
    t |= t << ( 1u << v );
  }
  return t & truth_mask( to_vars );
}

inline uint32_t truth_popcount( truth6 t )
{
  return static_cast<uint32_t>( std::popcount( t ) );
}

} // namespace cuttrace
