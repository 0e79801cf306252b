#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include <cuttrace/npn.hpp>

using namespace cuttrace;

TEST_CASE( "npn: AND and NOR share a class" )
{
  auto const and2 = npn_canonicalize( 0b1000, 2 );
  auto const nor2 = npn_canonicalize( 0b0001, 2 );
  CHECK( and2.canonical == nor2.canonical );
}

TEST_CASE( "npn: two-variable functions fall into 4 classes" )
{
  std::set<truth6> classes;
  for ( uint32_t tt = 0; tt < 16; ++tt )
  {
    classes.insert( npn_canonicalize( tt, 2 ).canonical );
  }
  CHECK( classes.size() == 4 );
}

TEST_CASE( "npn: four-variable functions fall into 222 classes" )
{
  std::set<truth6> classes;
  for ( uint32_t tt = 0; tt < 65536; ++tt )
  {
    classes.insert( npn_canonicalize( tt, 4 ).canonical );
  }
  CHECK( classes.size() == 222 );
}

TEST_CASE( "npn: canonicalization is idempotent and class-consistent" )
{
  std::mt19937_64 rng( 42 );
  for ( uint32_t trial = 0; trial < 200; ++trial )
  {
    uint32_t const n = 2 + trial % 3;
    truth6 const tt = rng() & truth_mask( n );
    auto const base = npn_canonicalize( tt, n );
    CHECK( npn_canonicalize( base.canonical, n ).canonical == base.canonical );

    npn_transform t;
    std::array<uint8_t, 4> idx{ 0, 1, 2, 3 };
    for ( uint32_t i = n; i-- > 1; )
    {
      std::swap( idx[i], idx[rng() % ( i + 1 )] );
    }
    t.perm = idx;
    t.input_neg = static_cast<uint8_t>( rng() & ( ( 1u << n ) - 1 ) );
    t.output_neg = ( rng() & 1u ) != 0;
    CHECK( npn_canonicalize( npn_apply( t, tt, n ), n ).canonical == base.canonical );
  }
}

TEST_CASE( "npn: the stored transform maps the input to its canonical form" )
{
  std::mt19937_64 rng( 7 );
  for ( uint32_t trial = 0; trial < 500; ++trial )
  {
    uint32_t const n = 2 + trial % 3;
    truth6 const tt = rng() & truth_mask( n );
    auto const res = npn_canonicalize( tt, n );
    CHECK( npn_apply( res.transform, tt, n ) == res.canonical );
  }
}

TEST_CASE( "npn: arity limit enforced" )
{
  CHECK_THROWS_AS( npn_canonicalize( 0, 5 ), std::invalid_argument );
}
