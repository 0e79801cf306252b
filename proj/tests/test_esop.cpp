#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include <cuttrace/esop.hpp>

#include "helpers.hpp"

using namespace cuttrace;

namespace
{

/* independent ANF oracle: Moebius transform over the subset lattice */
std::set<uint8_t> anf_monomials( truth6 tt, uint32_t n )
{
  std::set<uint8_t> monomials;
  for ( uint32_t s = 0; s < ( 1u << n ); ++s )
  {
    bool coeff = false;
    for ( uint32_t m = 0; m < ( 1u << n ); ++m )
    {
      if ( ( m & ~s ) == 0u )
      {
        coeff ^= truth_bit( tt, m );
      }
    }
    if ( coeff )
    {
      monomials.insert( static_cast<uint8_t>( s ) );
    }
  }
  return monomials;
}

} // namespace

TEST_CASE( "esop: already-ESOP function is returned as its two cubes" )
{
  /* x1 x2 ^ x3 over three variables */
  truth6 const tt = ( ( truth_var( 0 ) & truth_var( 1 ) ) ^ truth_var( 2 ) ) & truth_mask( 3 );
  auto const cubes = esop_of( tt, 3 );
  REQUIRE( cubes.size() == 2 );
  std::set<std::pair<uint8_t, uint8_t>> got;
  for ( auto const& c : cubes )
  {
    got.emplace( c.mask, c.bits );
  }
  CHECK( got.count( { 0b011, 0b011 } ) == 1 );
  CHECK( got.count( { 0b100, 0b100 } ) == 1 );
}

TEST_CASE( "esop: positive-Davio expansion of OR matches the ANF oracle" )
{
  truth6 const tt = 0b1110; // x1 | x2
  auto const cubes = pprm_cubes( tt, 2 );
  std::set<uint8_t> got;
  for ( auto const& c : cubes )
  {
    CHECK( c.bits == c.mask ); // PPRM uses positive literals only
    got.insert( c.mask );
  }
  CHECK( got == anf_monomials( tt, 2 ) );
  CHECK( got == std::set<uint8_t>{ 0b01, 0b10, 0b11 } );
}

TEST_CASE( "esop: PPRM equals the ANF oracle on random functions" )
{
  std::mt19937_64 rng( 21 );
  for ( uint32_t trial = 0; trial < 200; ++trial )
  {
    uint32_t const n = 2 + trial % 4;
    truth6 const tt = rng() & truth_mask( n );
    auto const cubes = pprm_cubes( tt, n );
    std::set<uint8_t> got;
    for ( auto const& c : cubes )
    {
      got.insert( c.mask );
    }
    CHECK( got == anf_monomials( tt, n ) );
  }
}

TEST_CASE( "esop: constant zero has no cubes" )
{
  CHECK( esop_of( 0, 4 ).empty() );
  CHECK( esop_of( 0, 0 ).empty() );
}

TEST_CASE( "esop: all four-variable functions are covered exactly" )
{
  for ( uint32_t tt = 0; tt < 65536; ++tt )
  {
    auto const cubes = esop_of( tt, 4 );
    if ( esop_function( cubes, 4 ) != tt )
    {
      FAIL( "mismatch on tt " + std::to_string( tt ) );
    }
  }
  SUCCEED();
}

TEST_CASE( "esop: search never exceeds the PPRM degree" )
{
  std::mt19937_64 rng( 8 );
  for ( uint32_t trial = 0; trial < 200; ++trial )
  {
    uint32_t const n = 2 + trial % 5;
    truth6 const tt = rng() & truth_mask( n );
    auto const best = esop_of( tt, n );
    auto const pprm = pprm_cubes( tt, n );
    CHECK( detail::max_degree( best ) <= detail::max_degree( pprm ) );
    CHECK( esop_function( best, n ) == tt );
  }
}

TEST_CASE( "fragment: single cube of degree four builds a depth-2 tree" )
{
  esop_cube cube;
  cube.mask = 0b1111;
  cube.bits = 0b1111;
  auto const frag = build_esop_fragment( { cube }, 4 );
  CHECK( fragment_depth( frag ) == 2 );
  CHECK( frag.and_count() == 3 );
  CHECK( fragment_function( frag, 4 ) == ( truth_mask( 4 ) & truth_var( 0 ) & truth_var( 1 ) &
                                           truth_var( 2 ) & truth_var( 3 ) ) );
}

TEST_CASE( "fragment: cubes of degree at most one give depth zero" )
{
  esop_cube a, b;
  a.mask = 0b001;
  a.bits = 0b001;
  b.mask = 0b010;
  b.bits = 0b000; // !x2
  auto const frag = build_esop_fragment( { a, b }, 3 );
  CHECK( fragment_depth( frag ) == 0 );
  CHECK( frag.and_count() == 0 );
}

TEST_CASE( "fragment: depth equals ceil(log2(max degree)) exactly" )
{
  std::mt19937_64 rng( 77 );
  for ( uint32_t trial = 0; trial < 300; ++trial )
  {
    uint32_t const n = 2 + trial % 5;
    truth6 const tt = rng() & truth_mask( n );
    auto const cubes = esop_of( tt, n );
    auto const frag = build_esop_fragment( cubes, n );
    uint32_t const deg = detail::max_degree( cubes );
    uint32_t expected = 0;
    while ( ( 1u << expected ) < deg )
    {
      ++expected;
    }
    if ( deg <= 1 )
    {
      expected = 0;
    }
    CHECK( fragment_depth( frag ) == expected );
    CHECK( fragment_function( frag, n ) == tt );
  }
}

TEST_CASE( "fragment: empty cube list is the constant zero" )
{
  auto const frag = build_esop_fragment( {}, 3 );
  CHECK( fragment_function( frag, 3 ) == 0 );
  CHECK( frag.gates.empty() );
}
