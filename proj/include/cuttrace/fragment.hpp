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
  \file fragment.hpp
  \brief Replacement recipes: small XAGs over placeholder leaves

  A fragment describes a candidate replacement independent of any
  network: gates reference either leaf slots or earlier fragment gates.
  The same recipe instantiates into a network (for rewriting) and into
  the e-graph (for tracing), keeping both views aligned.
*/

#pragma once

#include <cstdint>
#include <vector>

#include "truth.hpp"
#include "xag.hpp"

namespace cuttrace
{

/*! \brief Operand of a fragment gate: leaf slot, gate slot, or constant. */
struct fragment_ref
{
  enum class target : uint8_t
  {
    constant,
    leaf,
    gate
  };
  target kind{ target::constant };
  uint32_t index{ 0 };
  bool phase{ false };

  static fragment_ref make_constant( bool phase )
  {
    return fragment_ref{ target::constant, 0, phase };
  }
  static fragment_ref make_leaf( uint32_t index, bool phase = false )
  {
    return fragment_ref{ target::leaf, index, phase };
  }
  static fragment_ref make_gate( uint32_t index, bool phase = false )
  {
    return fragment_ref{ target::gate, index, phase };
  }
};

struct fragment_gate
{
  gate_kind kind;
  fragment_ref fanin[2];
};

/*! \brief A replacement cut over placeholder leaves. */
struct xag_fragment
{
  uint32_t num_leaves{ 0 };
  std::vector<fragment_gate> gates;
  fragment_ref output;

  /*! \brief Number of AND gates in the recipe (before structural hashing). */
  uint32_t and_count() const
  {
    uint32_t c = 0;
    for ( auto const& g : gates )
    {
      c += g.kind == gate_kind::and_gate ? 1u : 0u;
    }
    return c;
  }
};

/*! \brief Builds a fragment into `net` over the given leaf signals.
 *
 * Structural hashing applies: gates may fold or resolve to existing
 * nodes, so instantiation can add fewer nodes than the recipe lists.
 */
inline signal instantiate( xag_network& net, xag_fragment const& frag, std::vector<signal> const& leaves )
{
  std::vector<signal> built( frag.gates.size() );
  auto const resolve = [&]( fragment_ref const& r ) -> signal {
    switch ( r.kind )
    {
    case fragment_ref::target::constant:
      return net.get_constant( r.phase );
    case fragment_ref::target::leaf:
      return leaves.at( r.index ) ^ r.phase;
    default:
      return built.at( r.index ) ^ r.phase;
    }
  };
  for ( size_t i = 0; i < frag.gates.size(); ++i )
  {
    built[i] = net.create_gate( frag.gates[i].kind, resolve( frag.gates[i].fanin[0] ),
                                resolve( frag.gates[i].fanin[1] ) );
  }
  return resolve( frag.output );
}

/*! \brief Evaluates a fragment as a truth table over its leaves. */
inline truth6 fragment_function( xag_fragment const& frag, uint32_t num_vars )
{
  std::vector<truth6> built( frag.gates.size() );
  auto const resolve = [&]( fragment_ref const& r ) -> truth6 {
    truth6 t = 0;
    switch ( r.kind )
    {
    case fragment_ref::target::constant:
      t = 0;
      break;
    case fragment_ref::target::leaf:
      t = truth_var( r.index );
      break;
    default:
      t = built.at( r.index );
      break;
    }
    return r.phase ? truth_not( t, num_vars ) : t;
  };
  for ( size_t i = 0; i < frag.gates.size(); ++i )
  {
    truth6 const a = resolve( frag.gates[i].fanin[0] );
    truth6 const b = resolve( frag.gates[i].fanin[1] );
    built[i] = frag.gates[i].kind == gate_kind::and_gate ? ( a & b ) : ( a ^ b );
  }
  return resolve( frag.output ) & truth_mask( num_vars );
}

} // namespace cuttrace
