#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <cuttrace/mc_database.hpp>

using namespace cuttrace;

namespace
{

/* built once; the 4-input build is shared across test cases */
mc_database const& db4()
{
  static mc_database db = mc_database::build( 4 );
  return db;
}

truth6 simulate_lookup( mc_database const& db, truth6 tt, uint32_t n )
{
  auto const frag = db.lookup( tt, n );
  return fragment_function( frag, n );
}

} // namespace

TEST_CASE( "exact synthesis: parity is affine, no AND gates" )
{
  truth6 const parity = 0b0110100110010110; // x1 ^ x2 ^ x3 ^ x4
  auto const frag = exact_mc_synthesize( parity, 4, 3 );
  REQUIRE( frag.has_value() );
  CHECK( frag->and_count() == 0 );
}

TEST_CASE( "exact synthesis: majority of three needs one AND" )
{
  truth6 const maj3 = 0b11101000;
  auto const frag = exact_mc_synthesize( maj3, 3, 3 );
  REQUIRE( frag.has_value() );
  CHECK( frag->and_count() == 1 );
  CHECK( !exact_mc_synthesize( maj3, 3, 0 ).has_value() );
}

TEST_CASE( "exact synthesis: three-input AND needs two gates" )
{
  truth6 const and3 = 0b10000000;
  auto const frag = exact_mc_synthesize( and3, 3, 4 );
  REQUIRE( frag.has_value() );
  CHECK( frag->and_count() == 2 );
  /* deepening proves no smaller solution exists */
  CHECK( !exact_mc_synthesize( and3, 3, 1 ).has_value() );
}

TEST_CASE( "database: two-input build has 4 entries with at most one AND" )
{
  auto const db = mc_database::build( 2 );
  CHECK( db.size() == 4 );
  CHECK( db.max_and_count() == 1 );
  for ( auto const& [tt, frag] : db.entries() )
  {
    xag_fragment full;
    full.num_leaves = 2;
    std::vector<fragment_ref> gate_refs;
    npn_transform identity;
    for ( auto const& [a, b] : frag.gates )
    {
      auto const ra = detail::build_affine_combination( full, a, 2, identity, 2, gate_refs );
      auto const rb = detail::build_affine_combination( full, b, 2, identity, 2, gate_refs );
      full.gates.push_back( fragment_gate{ gate_kind::and_gate, { ra, rb } } );
      gate_refs.push_back( fragment_ref::make_gate( static_cast<uint32_t>( full.gates.size() - 1 ) ) );
    }
    full.output = detail::build_affine_combination( full, frag.output_mask, 2, identity, 2, gate_refs );
    CHECK( fragment_function( full, 2 ) == tt );
  }
}

TEST_CASE( "database: four-input build has 222 entries, max three ANDs" )
{
  CHECK( db4().size() == 222 );
  CHECK( db4().max_and_count() == 3 );
}

TEST_CASE( "database: lookup of elementary functions" )
{
  auto const and_frag = db4().lookup( 0b1000, 2 );
  CHECK( and_frag.and_count() == 1 );
  CHECK( fragment_function( and_frag, 2 ) == 0b1000 );

  auto const maj_frag = db4().lookup( 0b11101000, 3 );
  CHECK( maj_frag.and_count() == 1 );
  CHECK( fragment_function( maj_frag, 3 ) == 0b11101000 );
}

TEST_CASE( "database: lookup reproduces random functions exactly" )
{
  std::mt19937_64 rng( 11 );
  for ( uint32_t trial = 0; trial < 400; ++trial )
  {
    uint32_t const n = 2 + trial % 3;
    truth6 const tt = rng() & truth_mask( n );
    CHECK( simulate_lookup( db4(), tt, n ) == tt );
  }
}

TEST_CASE( "database: minimality certificate on sampled classes" )
{
  std::mt19937_64 rng( 5 );
  std::vector<std::pair<uint16_t, affine_fragment const*>> sample;
  for ( auto const& [tt, frag] : db4().entries() )
  {
    sample.emplace_back( tt, &frag );
  }
  for ( uint32_t i = 0; i < 20; ++i )
  {
    auto const& [tt, frag] = sample[rng() % sample.size()];
    if ( frag->and_count() == 0 )
    {
      continue;
    }
    CHECK( !exact_mc_synthesize( tt, 4, frag->and_count() - 1 ).has_value() );
  }
}

TEST_CASE( "database: save and load round-trip" )
{
  auto const db = mc_database::build( 2 );
  auto const text = db.save();
  auto const back = mc_database::load( text, 2 );
  CHECK( back.size() == db.size() );
  CHECK( back.save() == text );
  std::mt19937_64 rng( 3 );
  for ( uint32_t trial = 0; trial < 50; ++trial )
  {
    truth6 const tt = rng() & truth_mask( 2 );
    CHECK( simulate_lookup( back, tt, 2 ) == tt );
  }
}
