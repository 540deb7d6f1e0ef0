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

#pragma once

#include <random>
#include <string>
#include <vector>

#include <rpla/gate.hpp>
#include <rpla/netlist.hpp>
#include <rpla/pla.hpp>
#include <rpla/synth.hpp>

namespace rpla_test
{

inline std::string adder_pla()
{
  return ".i 3\n"
         ".o 2\n"
         ".ilb A B Cin\n"
         ".ob SUM CARRY\n"
         "001 10\n"
         "010 10\n"
         "100 10\n"
         "111 11\n"
         "011 01\n"
         "101 01\n"
         "110 01\n"
         ".e\n";
}

inline std::string subtractor_pla()
{
  return ".i 3\n"
         ".o 2\n"
         ".ilb A B Bin\n"
         ".ob DIFF BORROW\n"
         "001 11\n"
         "010 11\n"
         "011 01\n"
         "100 10\n"
         "111 11\n"
         ".e\n";
}

/* independent evaluator: applies the tabulated permutation tables instead
 * of the gate equation functions */
inline rpla::simulation_result simulate_with_tables( rpla::netlist const& nl,
                                                     std::vector<bool> const& input_values )
{
  auto const fredkin = rpla::permutation_of( rpla::gate_kind::fredkin );
  auto const feynman = rpla::permutation_of( rpla::gate_kind::feynman );
  std::vector<bool> value( nl.num_wires(), false );
  for ( size_t i = 0; i < input_values.size(); ++i )
  {
    value[nl.primary_inputs()[i]] = input_values[i];
  }
  for ( auto const& a : nl.ancillas() )
  {
    value[a.wire] = a.value;
  }
  for ( auto const& g : nl.gates() )
  {
    auto const& table = g.kind == rpla::gate_kind::fredkin ? fredkin : feynman;
    unsigned code = 0;
    for ( auto const w : g.inputs )
    {
      code = ( code << 1 ) | ( value[w] ? 1 : 0 );
    }
    auto const out = table.entries[code];
    for ( size_t i = 0; i < g.outputs.size(); ++i )
    {
      value[g.outputs[i]] = ( out >> ( g.outputs.size() - 1 - i ) ) & 1;
    }
  }
  rpla::simulation_result result;
  for ( auto const& [name, w] : nl.primary_outputs() )
  {
    result.outputs.emplace_back( name, value[w] );
  }
  for ( auto const w : nl.garbage() )
  {
    result.garbage.push_back( value[w] );
  }
  return result;
}

/* random structurally valid netlist: gates draw inputs from the pool of
 * not-yet-consumed wires, terminals split between outputs and garbage */
inline rpla::netlist random_netlist( std::mt19937& rng, bool fredkin_only = false )
{
  rpla::netlist nl;
  std::vector<rpla::wire_id> pool;
  auto const num_inputs = 1 + rng() % 5;
  for ( unsigned i = 0; i < num_inputs; ++i )
  {
    pool.push_back( nl.add_input( "in" + std::to_string( i ) ) );
  }
  auto const num_consts = rng() % 4;
  for ( unsigned i = 0; i < num_consts; ++i )
  {
    pool.push_back( nl.add_constant( rng() % 2 == 0, "z" + std::to_string( i ) ) );
  }
  auto const num_gates = rng() % 8;
  for ( unsigned g = 0; g < num_gates; ++g )
  {
    auto const kind = ( fredkin_only || rng() % 2 == 0 ) ? rpla::gate_kind::fredkin
                                                         : rpla::gate_kind::feynman;
    auto const k = rpla::arity_of( kind );
    if ( pool.size() < k )
    {
      break;
    }
    std::vector<rpla::wire_id> ins;
    for ( unsigned i = 0; i < k; ++i )
    {
      auto const pick = rng() % pool.size();
      ins.push_back( pool[pick] );
      pool.erase( pool.begin() + pick );
    }
    if ( kind == rpla::gate_kind::fredkin )
    {
      auto const outs = nl.add_fredkin( ins[0], ins[1], ins[2],
                                        nl.fresh_name( "w" ), nl.fresh_name( "w" ), nl.fresh_name( "w" ) );
      pool.insert( pool.end(), outs.begin(), outs.end() );
    }
    else
    {
      auto const outs = nl.add_feynman( ins[0], ins[1], nl.fresh_name( "w" ), nl.fresh_name( "w" ) );
      pool.insert( pool.end(), outs.begin(), outs.end() );
    }
  }
  unsigned out_counter = 0;
  for ( auto const w : pool )
  {
    if ( rng() % 2 == 0 )
    {
      nl.add_output( "o" + std::to_string( out_counter++ ), w );
    }
    else
    {
      nl.add_garbage( w );
    }
  }
  return nl;
}

inline rpla::pla_spec random_pla( std::mt19937& rng, unsigned max_n = 6, unsigned max_m = 4,
                                  unsigned max_cubes = 12 )
{
  rpla::pla_spec spec;
  spec.n = 1 + rng() % max_n;
  spec.m = 1 + rng() % max_m;
  for ( unsigned i = 0; i < spec.n; ++i )
  {
    spec.input_names.push_back( "in" + std::to_string( i ) );
  }
  for ( unsigned j = 0; j < spec.m; ++j )
  {
    spec.output_names.push_back( "out" + std::to_string( j ) );
  }
  auto const num_cubes = rng() % ( max_cubes + 1 );
  for ( unsigned c = 0; c < num_cubes; ++c )
  {
    rpla::cube cb;
    for ( unsigned i = 0; i < spec.n; ++i )
    {
      switch ( rng() % 4 )
      {
      case 0:
        cb.input_part.push_back( rpla::pla_literal::zero );
        break;
      case 1:
        cb.input_part.push_back( rpla::pla_literal::dash );
        break;
      default:
        cb.input_part.push_back( rpla::pla_literal::one );
        break;
      }
    }
    for ( unsigned j = 0; j < spec.m; ++j )
    {
      cb.output_part.push_back( rng() % 2 == 0 );
    }
    spec.cubes.push_back( std::move( cb ) );
  }
  return spec;
}

inline std::vector<rpla::synth_options> all_option_combos()
{
  std::vector<rpla::synth_options> combos;
  for ( auto const mode : { rpla::array_mode::used_only, rpla::array_mode::full } )
  {
    for ( auto const topo : { rpla::or_topology::chain, rpla::or_topology::balanced_tree } )
    {
      for ( auto const reuse : { false, true } )
      {
        combos.push_back( { mode, topo, reuse } );
      }
    }
  }
  return combos;
}

inline std::vector<bool> index_to_inputs( uint32_t v, unsigned n )
{
  std::vector<bool> inputs( n );
  for ( unsigned i = 0; i < n; ++i )
  {
    inputs[i] = ( v >> ( n - 1 - i ) ) & 1;
  }
  return inputs;
}

} // namespace rpla_test
