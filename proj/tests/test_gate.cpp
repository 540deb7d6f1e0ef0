#include <doctest.h>

#include <rpla/gate.hpp>

using namespace rpla;

TEST_CASE( "fredkin equations hold on all 8 inputs" )
{
  for ( unsigned code = 0; code < 8; ++code )
  {
    bool const x1 = ( code >> 2 ) & 1, x2 = ( code >> 1 ) & 1, x3 = code & 1;
    auto const y = apply_fredkin( x1, x2, x3 );
    CHECK( y[0] == x1 );
    CHECK( y[1] == ( ( !x1 && x2 ) || ( x1 && x3 ) ) );
    CHECK( y[2] == ( ( x1 && x2 ) || ( !x1 && x3 ) ) );
  }
}

TEST_CASE( "fredkin control behavior" )
{
  /* control 0 passes through, control 1 swaps */
  for ( bool b : { false, true } )
  {
    for ( bool c : { false, true } )
    {
      CHECK( apply_fredkin( false, b, c ) == std::array<bool, 3>{ false, b, c } );
      CHECK( apply_fredkin( true, b, c ) == std::array<bool, 3>{ true, c, b } );
    }
  }
  CHECK( apply_fredkin( true, false, true ) == std::array<bool, 3>{ true, true, false } );
}

TEST_CASE( "fredkin as AND and OR cells" )
{
  for ( bool a : { false, true } )
  {
    for ( bool b : { false, true } )
    {
      CHECK( apply_fredkin( a, b, false )[2] == ( a && b ) ); /* x3 tied to 0 */
      CHECK( apply_fredkin( a, b, true )[1] == ( a || b ) );  /* x3 tied to 1 */
    }
  }
  CHECK( apply_fredkin( true, true, false ) == std::array<bool, 3>{ true, false, true } );
  CHECK( apply_fredkin( false, false, true ) == std::array<bool, 3>{ false, false, true } );
}

TEST_CASE( "feynman equations, copier and complementer" )
{
  for ( bool a : { false, true } )
  {
    CHECK( apply_feynman( a, false ) == std::array<bool, 2>{ a, a } );
    CHECK( apply_feynman( a, true ) == std::array<bool, 2>{ a, !a } );
  }
  CHECK( apply_feynman( true, true ) == std::array<bool, 2>{ true, false } );
}

TEST_CASE( "permutation tables agree with the equation functions" )
{
  auto const fredkin = permutation_of( gate_kind::fredkin );
  REQUIRE( fredkin.arity == 3 );
  REQUIRE( fredkin.entries.size() == 8 );
  for ( unsigned code = 0; code < 8; ++code )
  {
    auto const y = apply_fredkin( ( code >> 2 ) & 1, ( code >> 1 ) & 1, code & 1 );
    CHECK( fredkin.entries[code] == ( ( y[0] << 2 ) | ( y[1] << 1 ) | y[2] ) );
    /* only x1=1 entries swap positions 2 and 3 */
    if ( ( code >> 2 ) & 1 )
    {
      CHECK( fredkin.entries[code] == ( code & 4 ) + ( ( code & 1 ) << 1 ) + ( ( code >> 1 ) & 1 ) );
    }
    else
    {
      CHECK( fredkin.entries[code] == code );
    }
  }

  auto const feynman = permutation_of( gate_kind::feynman );
  REQUIRE( feynman.arity == 2 );
  CHECK( feynman.entries == std::vector<uint8_t>{ 0, 1, 3, 2 } );
}

TEST_CASE( "bijectivity" )
{
  CHECK( is_bijective( permutation_of( gate_kind::fredkin ) ) );
  CHECK( is_bijective( permutation_of( gate_kind::feynman ) ) );

  permutation_table collision{ 2, { 0, 0, 3, 2 } };
  CHECK( !is_bijective( collision ) );
}

TEST_CASE( "conservativity" )
{
  CHECK( is_conservative( permutation_of( gate_kind::fredkin ) ) );
  CHECK( !is_conservative( permutation_of( gate_kind::feynman ) ) );
  /* the witness entry */
  CHECK( permutation_of( gate_kind::feynman ).entries[2] == 3 );

  permutation_table identity{ 2, { 0, 1, 2, 3 } };
  CHECK( is_conservative( identity ) );
}

TEST_CASE( "self-inverse" )
{
  CHECK( is_self_inverse( permutation_of( gate_kind::fredkin ) ) );
  CHECK( is_self_inverse( permutation_of( gate_kind::feynman ) ) );

  permutation_table rotation{ 2, { 1, 2, 3, 0 } };
  CHECK( !is_self_inverse( rotation ) );

  permutation_table collision{ 2, { 0, 0, 3, 2 } };
  CHECK_THROWS_AS( is_self_inverse( collision ), std::invalid_argument );
}
