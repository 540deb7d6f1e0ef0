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
  \file netlist.hpp
  \brief Reversible netlists over single-driver, single-consumer wires

  A netlist is a topologically ordered list of Fredkin/Feynman instances.
  Wires have exactly one driver (primary input, constant ancilla, or one
  gate output) and are consumed at most once as a gate input; fan-out must
  be realized by explicit copier gates.  Every terminal wire is either a
  primary output or declared garbage.
*/

#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gate.hpp"

namespace rpla
{

using wire_id = uint32_t;

inline constexpr wire_id null_wire = 0xffffffffu;

enum class wire_origin : uint8_t
{
  primary_input,
  constant,
  gate_output
};

/*! \brief Terminal/role classification of a wire within a netlist. */
enum class wire_role : uint8_t
{
  primary_input,
  constant_ancilla,
  internal,
  primary_output,
  garbage
};

struct constant_ancilla
{
  wire_id wire{};
  bool value{};
};

struct gate_instance
{
  gate_kind kind{};
  std::vector<wire_id> inputs;
  std::vector<wire_id> outputs;
};

inline bool is_valid_identifier( std::string const& s )
{
  if ( s.empty() || !( std::isalpha( static_cast<unsigned char>( s[0] ) ) || s[0] == '_' ) )
  {
    return false;
  }
  return std::all_of( s.begin() + 1, s.end(), []( char c ) {
    return std::isalnum( static_cast<unsigned char>( c ) ) || c == '_' || c == '.';
  } );
}

struct cost_report
{
  uint32_t fredkin_count{};
  uint32_t feynman_count{};
  uint32_t ancilla_count{};
  uint32_t garbage_count{};
  uint32_t width{};
  uint32_t depth{};

  bool operator==( cost_report const& ) const = default;
};

struct simulation_result
{
  std::vector<std::pair<std::string, bool>> outputs; /* declared order */
  std::vector<bool> garbage;                         /* declared order */
};

class netlist
{
public:
  /* construction */
  wire_id add_input( std::string name )
  {
    auto const w = declare_wire( std::move( name ), wire_origin::primary_input );
    primary_inputs_.push_back( w );
    return w;
  }

  wire_id add_constant( bool value, std::string name )
  {
    auto const w = declare_wire( std::move( name ), wire_origin::constant );
    ancillas_.push_back( { w, value } );
    return w;
  }

  std::array<wire_id, 3> add_fredkin( wire_id a, wire_id b, wire_id c,
                                      std::string p, std::string q, std::string r )
  {
    gate_instance g;
    g.kind = gate_kind::fredkin;
    g.inputs = { a, b, c };
    g.outputs = { declare_wire( std::move( p ), wire_origin::gate_output ),
                  declare_wire( std::move( q ), wire_origin::gate_output ),
                  declare_wire( std::move( r ), wire_origin::gate_output ) };
    gates_.push_back( g );
    return { g.outputs[0], g.outputs[1], g.outputs[2] };
  }

  std::array<wire_id, 2> add_feynman( wire_id a, wire_id b, std::string p, std::string q )
  {
    gate_instance g;
    g.kind = gate_kind::feynman;
    g.inputs = { a, b };
    g.outputs = { declare_wire( std::move( p ), wire_origin::gate_output ),
                  declare_wire( std::move( q ), wire_origin::gate_output ) };
    gates_.push_back( g );
    return { g.outputs[0], g.outputs[1] };
  }

  void add_output( std::string name, wire_id w )
  {
    primary_outputs_.emplace_back( std::move( name ), w );
  }

  void add_garbage( wire_id w )
  {
    garbage_.push_back( w );
  }

  /*! \brief Returns a name of the form <prefix><counter> unused so far. */
  std::string fresh_name( std::string const& prefix )
  {
    auto& counter = fresh_counters_[prefix];
    while ( true )
    {
      auto candidate = prefix + std::to_string( counter++ );
      if ( name_to_wire_.find( candidate ) == name_to_wire_.end() )
      {
        return candidate;
      }
    }
  }

  bool has_wire( std::string const& name ) const
  {
    return name_to_wire_.find( name ) != name_to_wire_.end();
  }

  wire_id wire_by_name( std::string const& name ) const
  {
    auto const it = name_to_wire_.find( name );
    return it == name_to_wire_.end() ? null_wire : it->second;
  }

  /* accessors */
  uint32_t num_wires() const { return static_cast<uint32_t>( wire_names_.size() ); }
  std::string const& wire_name( wire_id w ) const { return wire_names_[w]; }
  wire_origin origin( wire_id w ) const { return wire_origins_[w]; }
  std::vector<wire_id> const& primary_inputs() const { return primary_inputs_; }
  std::vector<constant_ancilla> const& ancillas() const { return ancillas_; }
  std::vector<gate_instance> const& gates() const { return gates_; }
  std::vector<std::pair<std::string, wire_id>> const& primary_outputs() const { return primary_outputs_; }
  std::vector<wire_id> const& garbage() const { return garbage_; }

  /*! \brief Five-way role of a wire; terminal status wins over origin. */
  wire_role role( wire_id w ) const
  {
    for ( auto const& [name, ow] : primary_outputs_ )
    {
      (void)name;
      if ( ow == w )
      {
        return wire_role::primary_output;
      }
    }
    if ( std::find( garbage_.begin(), garbage_.end(), w ) != garbage_.end() )
    {
      return wire_role::garbage;
    }
    switch ( wire_origins_[w] )
    {
    case wire_origin::primary_input:
      return wire_role::primary_input;
    case wire_origin::constant:
      return wire_role::constant_ancilla;
    default:
      return wire_role::internal;
    }
  }

  bool structurally_equal( netlist const& other ) const
  {
    auto const outs_eq = [&]() {
      if ( primary_outputs_.size() != other.primary_outputs_.size() )
      {
        return false;
      }
      for ( size_t i = 0; i < primary_outputs_.size(); ++i )
      {
        if ( primary_outputs_[i].first != other.primary_outputs_[i].first ||
             wire_names_[primary_outputs_[i].second] != other.wire_names_[other.primary_outputs_[i].second] )
        {
          return false;
        }
      }
      return true;
    };
    auto const names_of = []( netlist const& nl, std::vector<wire_id> const& ws ) {
      std::vector<std::string> r;
      for ( auto const w : ws )
      {
        r.push_back( nl.wire_names_[w] );
      }
      return r;
    };
    if ( names_of( *this, primary_inputs_ ) != names_of( other, other.primary_inputs_ ) ||
         names_of( *this, garbage_ ) != names_of( other, other.garbage_ ) || !outs_eq() ||
         ancillas_.size() != other.ancillas_.size() || gates_.size() != other.gates_.size() )
    {
      return false;
    }
    for ( size_t i = 0; i < ancillas_.size(); ++i )
    {
      if ( ancillas_[i].value != other.ancillas_[i].value ||
           wire_names_[ancillas_[i].wire] != other.wire_names_[other.ancillas_[i].wire] )
      {
        return false;
      }
    }
    for ( size_t i = 0; i < gates_.size(); ++i )
    {
      if ( gates_[i].kind != other.gates_[i].kind ||
           names_of( *this, gates_[i].inputs ) != names_of( other, other.gates_[i].inputs ) ||
           names_of( *this, gates_[i].outputs ) != names_of( other, other.gates_[i].outputs ) )
      {
        return false;
      }
    }
    return true;
  }

private:
  wire_id declare_wire( std::string name, wire_origin origin )
  {
    if ( !is_valid_identifier( name ) )
    {
      throw std::invalid_argument( "invalid wire identifier: " + name );
    }
    if ( name_to_wire_.find( name ) != name_to_wire_.end() )
    {
      throw std::invalid_argument( "duplicate wire identifier: " + name );
    }
    auto const w = static_cast<wire_id>( wire_names_.size() );
    name_to_wire_.emplace( name, w );
    wire_names_.push_back( std::move( name ) );
    wire_origins_.push_back( origin );
    return w;
  }

  std::vector<std::string> wire_names_;
  std::vector<wire_origin> wire_origins_;
  std::map<std::string, wire_id> name_to_wire_;
  std::vector<wire_id> primary_inputs_;
  std::vector<constant_ancilla> ancillas_;
  std::vector<gate_instance> gates_;
  std::vector<std::pair<std::string, wire_id>> primary_outputs_;
  std::vector<wire_id> garbage_;
  std::map<std::string, uint64_t> fresh_counters_;
};

/*! \brief Structural checks; one message per violation, empty means valid. */
inline std::vector<std::string> validate( netlist const& nl )
{
  std::vector<std::string> diags;
  auto const num = nl.num_wires();

  /* driver position per wire: 0 = PI/ancilla, gate index + 1 = gate output */
  std::vector<int64_t> driver_count( num, 0 );
  std::vector<int64_t> driver_pos( num, -1 );
  for ( auto const w : nl.primary_inputs() )
  {
    ++driver_count[w];
    driver_pos[w] = 0;
  }
  for ( auto const& a : nl.ancillas() )
  {
    ++driver_count[a.wire];
    driver_pos[a.wire] = 0;
  }
  for ( size_t gi = 0; gi < nl.gates().size(); ++gi )
  {
    auto const& g = nl.gates()[gi];
    auto const in_arity = arity_of( g.kind );
    if ( g.inputs.size() != in_arity || g.outputs.size() != in_arity )
    {
      diags.push_back( "gate " + std::to_string( gi ) + ": arity mismatch (" +
                       std::to_string( g.inputs.size() ) + " in, " +
                       std::to_string( g.outputs.size() ) + " out, expected " +
                       std::to_string( in_arity ) + ")" );
    }
    for ( auto const w : g.outputs )
    {
      if ( w >= num )
      {
        diags.push_back( "gate " + std::to_string( gi ) + ": undeclared output wire" );
        continue;
      }
      ++driver_count[w];
      if ( driver_pos[w] < 0 )
      {
        driver_pos[w] = static_cast<int64_t>( gi ) + 1;
      }
    }
  }
  for ( wire_id w = 0; w < num; ++w )
  {
    if ( driver_count[w] == 0 )
    {
      diags.push_back( "wire '" + nl.wire_name( w ) + "': no driver" );
    }
    else if ( driver_count[w] > 1 )
    {
      diags.push_back( "wire '" + nl.wire_name( w ) + "': duplicate driver" );
    }
  }

  std::vector<uint32_t> consumed( num, 0 );
  for ( size_t gi = 0; gi < nl.gates().size(); ++gi )
  {
    for ( auto const w : nl.gates()[gi].inputs )
    {
      if ( w >= num )
      {
        diags.push_back( "gate " + std::to_string( gi ) + ": undeclared input wire" );
        continue;
      }
      if ( driver_pos[w] < 0 || driver_pos[w] > static_cast<int64_t>( gi ) )
      {
        diags.push_back( "gate " + std::to_string( gi ) + ": wire '" + nl.wire_name( w ) +
                         "' used before it is driven" );
      }
      if ( ++consumed[w] == 2 )
      {
        diags.push_back( "wire '" + nl.wire_name( w ) + "': fan-out (consumed more than once)" );
      }
    }
  }

  std::vector<uint32_t> as_output( num, 0 ), as_garbage( num, 0 );
  for ( auto const& [name, w] : nl.primary_outputs() )
  {
    (void)name;
    if ( w >= num )
    {
      diags.push_back( "primary output bound to undeclared wire" );
      continue;
    }
    ++as_output[w];
  }
  for ( auto const w : nl.garbage() )
  {
    if ( w >= num )
    {
      diags.push_back( "garbage declaration names undeclared wire" );
      continue;
    }
    ++as_garbage[w];
  }
  for ( wire_id w = 0; w < num; ++w )
  {
    if ( as_output[w] > 0 && as_garbage[w] > 0 )
    {
      diags.push_back( "wire '" + nl.wire_name( w ) + "': both primary output and garbage" );
    }
    auto const terminal_uses = as_output[w] + as_garbage[w];
    if ( consumed[w] > 0 && terminal_uses > 0 )
    {
      diags.push_back( "wire '" + nl.wire_name( w ) + "': consumed by a gate but also terminal" );
    }
    if ( consumed[w] == 0 && terminal_uses == 0 )
    {
      diags.push_back( "wire '" + nl.wire_name( w ) + "': dangling (neither consumed, output, nor garbage)" );
    }
    if ( terminal_uses > 1 && !( as_output[w] > 0 && as_garbage[w] > 0 ) )
    {
      diags.push_back( "wire '" + nl.wire_name( w ) + "': multiple terminal declarations" );
    }
  }
  return diags;
}

/*! \brief Evaluates gates in netlist order; inputs given in declaration order. */
inline simulation_result simulate( netlist const& nl, std::vector<bool> const& input_values )
{
  if ( input_values.size() != nl.primary_inputs().size() )
  {
    throw std::invalid_argument( "simulate: expected " + std::to_string( nl.primary_inputs().size() ) +
                                 " input values, got " + std::to_string( input_values.size() ) );
  }
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
    if ( g.kind == gate_kind::fredkin )
    {
      auto const y = apply_fredkin( value[g.inputs[0]], value[g.inputs[1]], value[g.inputs[2]] );
      for ( int i = 0; i < 3; ++i )
      {
        value[g.outputs[i]] = y[i];
      }
    }
    else
    {
      auto const y = apply_feynman( value[g.inputs[0]], value[g.inputs[1]] );
      value[g.outputs[0]] = y[0];
      value[g.outputs[1]] = y[1];
    }
  }
  simulation_result result;
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

/*! \brief Name-keyed convenience wrapper around simulate. */
inline simulation_result simulate( netlist const& nl, std::map<std::string, bool> const& assignment )
{
  if ( assignment.size() != nl.primary_inputs().size() )
  {
    throw std::invalid_argument( "simulate: assignment must cover every primary input exactly once" );
  }
  std::vector<bool> values;
  for ( auto const w : nl.primary_inputs() )
  {
    auto const it = assignment.find( nl.wire_name( w ) );
    if ( it == assignment.end() )
    {
      throw std::invalid_argument( "simulate: missing input '" + nl.wire_name( w ) + "'" );
    }
    values.push_back( it->second );
  }
  return simulate( nl, values );
}

/*! \brief Structural cost metrics.
 *
 * Width counts a wire live from its driver event until its consumer event;
 * terminal wires stay live to the end.  Depth is the longest gate-to-gate
 * dependency chain.
 */
inline cost_report stats( netlist const& nl )
{
  cost_report report;
  report.ancilla_count = static_cast<uint32_t>( nl.ancillas().size() );
  for ( auto const& g : nl.gates() )
  {
    if ( g.kind == gate_kind::fredkin )
    {
      ++report.fredkin_count;
    }
    else
    {
      ++report.feynman_count;
    }
  }

  auto const num = nl.num_wires();
  uint32_t consumed_wires = 0;
  std::vector<bool> consumed( num, false );
  for ( auto const& g : nl.gates() )
  {
    for ( auto const w : g.inputs )
    {
      consumed[w] = true;
      ++consumed_wires;
    }
  }
  auto const terminal = num - consumed_wires;
  report.garbage_count = terminal - static_cast<uint32_t>( nl.primary_outputs().size() );

  /* events: PI and ancilla declarations, then gates in order */
  auto const num_events = nl.primary_inputs().size() + nl.ancillas().size() + nl.gates().size();
  std::vector<int64_t> born( num, 0 ), dies( num, static_cast<int64_t>( num_events ) );
  size_t event = 0;
  for ( auto const w : nl.primary_inputs() )
  {
    born[w] = static_cast<int64_t>( event++ );
  }
  for ( auto const& a : nl.ancillas() )
  {
    born[a.wire] = static_cast<int64_t>( event++ );
  }
  std::vector<uint32_t> gate_depth( nl.gates().size(), 0 );
  std::vector<int64_t> driver_gate( num, -1 );
  for ( size_t gi = 0; gi < nl.gates().size(); ++gi )
  {
    auto const& g = nl.gates()[gi];
    uint32_t d = 0;
    for ( auto const w : g.inputs )
    {
      dies[w] = static_cast<int64_t>( event );
      if ( driver_gate[w] >= 0 )
      {
        d = std::max( d, gate_depth[driver_gate[w]] );
      }
    }
    for ( auto const w : g.outputs )
    {
      born[w] = static_cast<int64_t>( event );
      driver_gate[w] = static_cast<int64_t>( gi );
    }
    gate_depth[gi] = d + 1;
    report.depth = std::max( report.depth, gate_depth[gi] );
    ++event;
  }
  /* sweep: +1 at born, -1 at dies */
  std::vector<int64_t> delta( num_events + 1, 0 );
  for ( wire_id w = 0; w < num; ++w )
  {
    ++delta[born[w]];
    if ( dies[w] < static_cast<int64_t>( num_events ) )
    {
      --delta[dies[w]];
    }
  }
  int64_t live = 0;
  for ( size_t e = 0; e < num_events; ++e )
  {
    live += delta[e];
    report.width = std::max<uint32_t>( report.width, static_cast<uint32_t>( live ) );
  }
  return report;
}

} // namespace rpla
