#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include <cuttrace/cuts.hpp>

#include "helpers.hpp"

using namespace cuttrace;

namespace
{

/* condition (a): every root->PI path passes through a leaf */
bool escapes_leaves( xag_network const& net, uint32_t root, std::set<uint32_t> const& leaves )
{
  std::vector<bool> visited( net.size(), false );
  std::function<bool( uint32_t )> dfs = [&]( uint32_t id ) -> bool {
    if ( leaves.count( id ) )
    {
      return false;
    }
    if ( net.is_pi( id ) )
    {
      return true;
    }
    if ( net.is_constant( id ) || visited[id] )
    {
      return false;
    }
    visited[id] = true;
    return dfs( net.fanin0( id ).node() ) || dfs( net.fanin1( id ).node() );
  };
  return dfs( root );
}

/* condition (b): the leaf lies on at least one root->PI path */
bool leaf_on_path( xag_network const& net, uint32_t root, uint32_t leaf )
{
  std::vector<bool> visited( net.size(), false );
  std::function<bool( uint32_t )> reach = [&]( uint32_t id ) -> bool {
    if ( id == leaf )
    {
      return true;
    }
    if ( !net.is_gate( id ) || visited[id] )
    {
      return false;
    }
    visited[id] = true;
    return reach( net.fanin0( id ).node() ) || reach( net.fanin1( id ).node() );
  };
  if ( !reach( root ) )
  {
    return false;
  }
  std::vector<bool> visited2( net.size(), false );
  std::function<bool( uint32_t )> to_pi = [&]( uint32_t id ) -> bool {
    if ( net.is_pi( id ) )
    {
      return true;
    }
    if ( !net.is_gate( id ) || visited2[id] )
    {
      return false;
    }
    visited2[id] = true;
    return to_pi( net.fanin0( id ).node() ) || to_pi( net.fanin1( id ).node() );
  };
  return to_pi( leaf );
}

bool is_valid_cut( xag_network const& net, uint32_t root, std::vector<uint32_t> const& leaves )
{
  std::set<uint32_t> const leaf_set( leaves.begin(), leaves.end() );
  if ( escapes_leaves( net, root, leaf_set ) )
  {
    return false;
  }
  for ( auto const l : leaves )
  {
    if ( !leaf_on_path( net, root, l ) )
    {
      return false;
    }
  }
  return true;
}

/* Brute-force oracle over the (small) cone of `root`: every subset of cone
 * nodes with at most k elements that satisfies both cut conditions. */
std::set<std::vector<uint32_t>> all_valid_cuts( xag_network const& net, uint32_t root, uint32_t k )
{
  std::vector<uint32_t> cone;
  std::vector<bool> in_cone( net.size(), false );
  std::function<void( uint32_t )> collect = [&]( uint32_t id ) {
    if ( in_cone[id] || net.is_constant( id ) )
    {
      return;
    }
    in_cone[id] = true;
    cone.push_back( id );
    if ( net.is_gate( id ) )
    {
      collect( net.fanin0( id ).node() );
      collect( net.fanin1( id ).node() );
    }
  };
  collect( root );
  std::sort( cone.begin(), cone.end() );
  REQUIRE( cone.size() <= 20 );

  std::set<std::vector<uint32_t>> result;
  for ( uint64_t mask = 1; mask < ( uint64_t( 1 ) << cone.size() ); ++mask )
  {
    if ( std::popcount( mask ) > int( k ) )
    {
      continue;
    }
    std::vector<uint32_t> leaves;
    for ( uint32_t i = 0; i < cone.size(); ++i )
    {
      if ( ( mask >> i ) & 1u )
      {
        leaves.push_back( cone[i] );
      }
    }
    if ( is_valid_cut( net, root, leaves ) )
    {
      result.insert( leaves );
    }
  }
  return result;
}

} // namespace

TEST_CASE( "cuts: a PI node carries exactly the trivial cut" )
{
  xag_network net;
  auto const a = net.create_pi( "a" );
  auto const b = net.create_pi( "b" );
  net.create_po( "y", net.create_and( a, b ) );
  auto const cuts = enumerate_cuts( net, 4, 12 );
  REQUIRE( cuts.at( a.node() ).size() == 1 );
  CHECK( cuts.at( a.node() )[0].leaves == std::vector<uint32_t>{ a.node() } );
  CHECK( cuts.at( a.node() )[0].table == 0b10 );
}

TEST_CASE( "cuts: gate over two PIs has the merged and the trivial cut" )
{
  xag_network net;
  auto const a = net.create_pi( "a" );
  auto const b = net.create_pi( "b" );
  auto const g = net.create_and( a, b );
  net.create_po( "y", g );
  auto const cuts = enumerate_cuts( net, 4, 12 );
  REQUIRE( cuts.at( g.node() ).size() == 2 );
  CHECK( cuts.at( g.node() )[0].leaves == std::vector<uint32_t>{ a.node(), b.node() } );
  CHECK( cuts.at( g.node() )[0].table == 0b1000 );
  CHECK( cuts.at( g.node() )[1].leaves == std::vector<uint32_t>{ g.node() } );
}

TEST_CASE( "cuts: truth tables of elementary gates" )
{
  xag_network net;
  auto const a = net.create_pi( "a" );
  auto const b = net.create_pi( "b" );
  auto const g = net.create_and( a, b );
  auto const x = net.create_xor( a, b );
  net.create_po( "y", net.create_xor( g, x ) );
  CHECK( cut_function( net, g.node(), { a.node(), b.node() } ) == 0b1000 );
  CHECK( cut_function( net, x.node(), { a.node(), b.node() } ) == 0b0110 );
}

TEST_CASE( "cuts: full adder carry over the three PIs is majority" )
{
  auto const net = test::full_adder();
  uint32_t const carry = net.output( 1 ).second.node();
  std::vector<uint32_t> const pis = net.pis();
  CHECK( cut_function( net, carry, pis ) == 0b11101000 );

  auto const cuts = enumerate_cuts( net, 6, 16 );
  bool found = false;
  for ( auto const& c : cuts.at( carry ) )
  {
    if ( c.leaves == pis )
    {
      found = true;
      CHECK( c.table == 0b11101000 );
    }
  }
  CHECK( found );
}

TEST_CASE( "cuts: the all-PI cut exists at both full adder roots" )
{
  auto const net = test::full_adder();
  for ( auto const out : { net.output( 0 ).second.node(), net.output( 1 ).second.node() } )
  {
    auto const oracle = all_valid_cuts( net, out, 6 );
    CHECK( oracle.count( net.pis() ) == 1 );
    auto const cuts = enumerate_cuts( net, 6, 32 );
    std::set<std::vector<uint32_t>> enumerated;
    for ( auto const& c : cuts.at( out ) )
    {
      enumerated.insert( c.leaves );
    }
    /* the enumeration finds the all-PI cut, and everything it finds the
     * brute-force oracle accepts */
    CHECK( enumerated.count( net.pis() ) == 1 );
    for ( auto const& leaves : enumerated )
    {
      CHECK( oracle.count( leaves ) == 1 );
    }
  }
}

TEST_CASE( "cuts: malformed cut is rejected" )
{
  auto const net = test::full_adder();
  uint32_t const carry = net.output( 1 ).second.node();
  CHECK_THROWS_AS( cut_function( net, carry, { net.pis()[0] } ), std::invalid_argument );
}

TEST_CASE( "cuts: parameter validation" )
{
  auto const net = test::full_adder();
  CHECK_THROWS_AS( enumerate_cuts( net, 1, 12 ), std::invalid_argument );
  CHECK_THROWS_AS( enumerate_cuts( net, 7, 12 ), std::invalid_argument );
  CHECK_THROWS_AS( enumerate_cuts( net, 4, 0 ), std::invalid_argument );
}

TEST_CASE( "cuts: both cut conditions hold and tables match cone simulation" )
{
  for ( uint64_t seed = 0; seed < 100; ++seed )
  {
    auto const net = test::random_network( seed, 4 + seed % 4, 8 + seed % 20 );
    auto const cuts = enumerate_cuts( net, 4, 8 );
    for ( uint32_t id = 1; id < net.size(); ++id )
    {
      if ( !net.is_gate( id ) )
      {
        continue;
      }
      for ( auto const& c : cuts.at( id ) )
      {
        CHECK( is_valid_cut( net, id, c.leaves ) );
        CHECK( cut_function( net, id, c.leaves ) == c.table );
      }
    }
  }
}

TEST_CASE( "cuts: raising the priority limit never drops a leaf set" )
{
  for ( uint64_t seed = 300; seed < 400; ++seed )
  {
    auto const net = test::random_network( seed, 5, 12 + seed % 25 );
    auto const small = enumerate_cuts( net, 4, 6 );
    auto const large = enumerate_cuts( net, 4, 10 );
    for ( uint32_t id = 1; id < net.size(); ++id )
    {
      if ( !net.is_gate( id ) )
      {
        continue;
      }
      std::set<std::vector<uint32_t>> in_large;
      for ( auto const& c : large.at( id ) )
      {
        in_large.insert( c.leaves );
      }
      for ( auto const& c : small.at( id ) )
      {
        CHECK( in_large.count( c.leaves ) == 1 );
      }
    }
  }
}

TEST_CASE( "cuts: replacing a cone by its table preserves the network function" )
{
  for ( uint64_t seed = 500; seed < 520; ++seed )
  {
    auto const net = test::random_network( seed, 5, 18 );
    auto const cuts = enumerate_cuts( net, 4, 8 );
    auto const patterns = exhaustive_patterns( net.num_pis() );

    /* node-level simulation to get every node's signature */
    std::vector<std::vector<uint64_t>> values( net.size(), std::vector<uint64_t>( patterns[0].size(), 0 ) );
    for ( uint32_t i = 0; i < net.num_pis(); ++i )
    {
      values[net.pis()[i]] = patterns[i];
    }
    for ( uint32_t id = 1; id < net.size(); ++id )
    {
      if ( !net.is_gate( id ) )
      {
        continue;
      }
      for ( size_t b = 0; b < values[id].size(); ++b )
      {
        uint64_t const a0 = values[net.fanin0( id ).node()][b] ^ ( net.fanin0( id ).phase() ? ~0ull : 0 );
        uint64_t const a1 = values[net.fanin1( id ).node()][b] ^ ( net.fanin1( id ).phase() ? ~0ull : 0 );
        values[id][b] = net.is_and( id ) ? ( a0 & a1 ) : ( a0 ^ a1 );
      }
    }

    for ( uint32_t id = 1; id < net.size(); ++id )
    {
      if ( !net.is_gate( id ) )
      {
        continue;
      }
      for ( auto const& c : cuts.at( id ) )
      {
        /* evaluating the cut table on the leaves' signatures must reproduce
         * the root's signature: a lookup-table replacement is sound */
        for ( size_t b = 0; b < values[id].size(); ++b )
        {
          uint64_t expect = 0;
          for ( uint32_t bit = 0; bit < 64; ++bit )
          {
            uint32_t m = 0;
            for ( size_t l = 0; l < c.leaves.size(); ++l )
            {
              m |= ( ( values[c.leaves[l]][b] >> bit ) & 1u ) << l;
            }
            expect |= uint64_t( truth_bit( c.table, m ) ) << bit;
          }
          CHECK( expect == values[id][b] );
        }
      }
    }
  }
}
