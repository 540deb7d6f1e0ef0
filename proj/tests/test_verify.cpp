#include <doctest.h>

#include <cmath>

#include <rpla/pla.hpp>
#include <rpla/synth.hpp>
#include <rpla/verify.hpp>

#include "helpers.hpp"

using namespace rpla;

TEST_CASE( "verify_against_spec: matching circuits" )
{
  auto const adder = parse_pla( rpla_test::adder_pla() );
  auto const report = verify_against_spec( synthesize( expand_to_minterms( adder ) ), adder );
  CHECK( report.total_vectors == 8 );
  CHECK( report.ok() );
  CHECK( report.injective );

  auto const sub = parse_pla( rpla_test::subtractor_pla() );
  auto const sub_report = verify_against_spec( synthesize( expand_to_minterms( sub ) ), sub );
  CHECK( sub_report.ok() );
  CHECK( sub_report.injective );
}

TEST_CASE( "verify_against_spec: adder against subtractor mismatches" )
{
  auto const adder = parse_pla( rpla_test::adder_pla() );
  auto sub = parse_pla( rpla_test::subtractor_pla() );
  /* line the names up so only the functions differ */
  sub.input_names = adder.input_names;
  sub.output_names = adder.output_names;
  auto const report = verify_against_spec( synthesize( expand_to_minterms( adder ) ), sub );
  CHECK( !report.ok() );
  /* CARRY and BORROW first disagree at 0+0+1 vs 0-0-1 */
  CHECK( report.mismatches.front().input_vector == 1 );
}

TEST_CASE( "verify_against_spec rejects name/arity mismatches" )
{
  auto const adder = parse_pla( rpla_test::adder_pla() );
  auto const nl = synthesize( expand_to_minterms( adder ) );
  auto two_input = parse_pla( ".i 2\n.o 2\n.ilb A B\n.ob SUM CARRY\n11 01\n.e\n" );
  CHECK_THROWS_AS( verify_against_spec( nl, two_input ), std::invalid_argument );
  auto renamed = adder;
  renamed.input_names = { "X", "Y", "Z" };
  CHECK_THROWS_AS( verify_against_spec( nl, renamed ), std::invalid_argument );
}

TEST_CASE( "single-output function enumeration" )
{
  auto const one = verify_all_single_output_functions( 1 );
  CHECK( one.functions_checked == 4 );
  CHECK( one.failures == 0 );

  auto const two = verify_all_single_output_functions( 2 );
  CHECK( two.functions_checked == 16 );
  CHECK( two.failures == 0 );

  auto const three = verify_all_single_output_functions( 3 );
  CHECK( three.functions_checked == 256 );
  CHECK( three.failures == 0 );
}

TEST_CASE( "landauer bound" )
{
  CHECK( landauer_bound( 1, 300.0 ) == doctest::Approx( 2.8711e-21 ).epsilon( 1e-4 ) );
  CHECK( std::abs( landauer_bound( 1, 300.0 ) - 2.8711e-21 ) < 1e-24 );
  CHECK( landauer_bound( 0, 77.0 ) == 0.0 );
  /* bilinear */
  CHECK( landauer_bound( 6, 300.0 ) == doctest::Approx( 6.0 * landauer_bound( 1, 300.0 ) ) );
  CHECK( landauer_bound( 1, 600.0 ) == doctest::Approx( 2.0 * landauer_bound( 1, 300.0 ) ) );
  /* monotone */
  CHECK( landauer_bound( 2, 300.0 ) > landauer_bound( 1, 300.0 ) );
  CHECK( landauer_bound( 1, 301.0 ) > landauer_bound( 1, 300.0 ) );
  CHECK_THROWS_AS( landauer_bound( 1, 0.0 ), std::invalid_argument );
  CHECK_THROWS_AS( landauer_bound( 1, -1.0 ), std::invalid_argument );
}

TEST_CASE( "garbage energy" )
{
  netlist pass;
  pass.add_output( "f", pass.add_input( "a" ) );
  CHECK( garbage_energy( pass, 300.0 ) == 0.0 );

  netlist cell;
  auto const a = cell.add_input( "a" );
  auto const b = cell.add_input( "b" );
  auto const z = cell.add_constant( false, "z0" );
  auto const outs = cell.add_fredkin( a, b, z, "g1", "g2", "f" );
  cell.add_output( "f", outs[2] );
  cell.add_garbage( outs[0] );
  cell.add_garbage( outs[1] );
  CHECK( garbage_energy( cell, 300.0 ) == doctest::Approx( 2.0 * landauer_bound( 1, 300.0 ) ) );
  CHECK( garbage_energy( cell, 300.0 ) == landauer_bound( stats( cell ).garbage_count, 300.0 ) );
}
