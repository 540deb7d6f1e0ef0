/* rpla: reversible PLA synthesis and verification toolkit
 * Copyright (C) 2026
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
  \file verify.hpp
  \brief Exhaustive oracle-equivalence and injectivity checks
*/

#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "netlist.hpp"
#include "pla.hpp"
#include "synth.hpp"

namespace rpla
{

inline constexpr double boltzmann_constant = 1.380649e-23; /* J/K, exact SI */
inline constexpr size_t max_reported_mismatches = 32;

struct mismatch
{
  uint32_t input_vector{};
  std::vector<bool> expected;
  std::vector<bool> actual;
};

struct verification_report
{
  uint64_t total_vectors{};
  std::vector<mismatch> mismatches; /* ascending vector order, capped */
  bool injective{};
  std::chrono::duration<double> elapsed{};

  bool ok() const { return mismatches.empty(); }
};

/*! \brief Simulates all 2^n vectors against the truth-table oracle.
 *
 * Injectivity is judged over the full terminal tuple (outputs ++ garbage),
 * since reversibility concerns the whole output vector.
 */
inline verification_report verify_against_spec( netlist const& nl, pla_spec const& spec )
{
  auto const start = std::chrono::steady_clock::now();
  if ( nl.primary_inputs().size() != spec.n )
  {
    throw std::invalid_argument( "verify: netlist has " + std::to_string( nl.primary_inputs().size() ) +
                                 " inputs, spec has " + std::to_string( spec.n ) );
  }
  for ( unsigned i = 0; i < spec.n; ++i )
  {
    if ( nl.wire_name( nl.primary_inputs()[i] ) != spec.input_names[i] )
    {
      throw std::invalid_argument( "verify: input name mismatch at position " + std::to_string( i ) );
    }
  }
  if ( nl.primary_outputs().size() != spec.m )
  {
    throw std::invalid_argument( "verify: output count mismatch" );
  }

  auto const oracle = truth_table( spec );
  verification_report report;
  report.total_vectors = 1u << spec.n;
  std::set<std::vector<bool>> terminal_tuples;
  for ( uint32_t v = 0; v < report.total_vectors; ++v )
  {
    std::vector<bool> inputs( spec.n );
    for ( unsigned i = 0; i < spec.n; ++i )
    {
      inputs[i] = ( v >> ( spec.n - 1 - i ) ) & 1;
    }
    auto const sim = simulate( nl, inputs );
    std::vector<bool> actual;
    for ( auto const& [name, bit] : sim.outputs )
    {
      (void)name;
      actual.push_back( bit );
    }
    if ( actual != oracle[v] && report.mismatches.size() < max_reported_mismatches )
    {
      report.mismatches.push_back( { v, oracle[v], actual } );
    }
    auto tuple = actual;
    tuple.insert( tuple.end(), sim.garbage.begin(), sim.garbage.end() );
    terminal_tuples.insert( std::move( tuple ) );
  }
  report.injective = terminal_tuples.size() == report.total_vectors;
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

struct enumeration_summary
{
  uint64_t functions_checked{};
  uint64_t failures{};
};

/*! \brief Synthesizes and verifies every single-output function of n variables. */
inline enumeration_summary verify_all_single_output_functions( unsigned n, synth_options const& opts = {} )
{
  if ( n < 1 || n > 4 )
  {
    throw std::invalid_argument( "function enumeration supports 1 <= n <= 4" );
  }
  enumeration_summary summary;
  auto const rows = 1u << n;
  for ( uint64_t subset = 0; subset < ( 1ull << rows ); ++subset )
  {
    minterm_spec ms;
    ms.n = n;
    ms.m = 1;
    for ( unsigned i = 0; i < n; ++i )
    {
      ms.input_names.push_back( "in" + std::to_string( i ) );
    }
    ms.output_names.push_back( "f" );
    ms.per_output.emplace_back();
    for ( uint32_t t = 0; t < rows; ++t )
    {
      if ( ( subset >> t ) & 1 )
      {
        ms.per_output[0].push_back( t );
      }
    }
    auto const report = verify_against_spec( synthesize( ms, opts ), to_pla( ms ) );
    ++summary.functions_checked;
    if ( !report.ok() || !report.injective )
    {
      ++summary.failures;
    }
  }
  return summary;
}

/*! \brief Minimum heat per erased bits: bits * k * T * ln 2. */
inline double landauer_bound( uint64_t bits_erased, double temperature_kelvin )
{
  if ( !( temperature_kelvin > 0.0 ) )
  {
    throw std::invalid_argument( "landauer_bound: temperature must be positive" );
  }
  return static_cast<double>( bits_erased ) * boltzmann_constant * temperature_kelvin * std::log( 2.0 );
}

/*! \brief Energy floor if every garbage wire of the netlist were erased. */
inline double garbage_energy( netlist const& nl, double temperature_kelvin )
{
  return landauer_bound( stats( nl ).garbage_count, temperature_kelvin );
}

} // namespace rpla
