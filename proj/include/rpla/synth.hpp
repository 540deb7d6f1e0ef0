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
  \file synth.hpp
  \brief Three-plane reversible PLA synthesis

  Compiles a minterm specification into a netlist with the structure:
  Feynman literal plane (complement + copy), Fredkin AND plane (one
  left-to-right chain per minterm), Fredkin OR plane (per-output sums,
  shared products replicated by Feynman copiers).

  Fixed cell configurations:
    complementer  (x, 1)        -> (x, !x)
    copier        (w, 0)        -> (w, w)
    AND cell      (p, l, 0)     -> (p, !p&l, p&l)
    OR cell       (x, y, 1)     -> (x, x|y, !x|y)

  Copy assignment is deterministic: copies are produced into FIFO queues
  and consumed by minterms in ascending index order, literals in input
  order.  With pass-through reuse, the first AND cell of a chain returns
  its y1 (a clean copy of input 0's literal) to the queue while demand
  remains, so the literal plane only ever emits one seed copy per
  polarity of input 0.
*/

#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "netlist.hpp"
#include "pla.hpp"

namespace rpla
{

enum class array_mode : uint8_t
{
  used_only, /* realize only minterms referenced by some output */
  full       /* realize all 2^n minterms */
};

enum class or_topology : uint8_t
{
  chain,
  balanced_tree
};

struct synth_options
{
  array_mode mode{ array_mode::used_only };
  or_topology topology{ or_topology::chain };
  bool reuse_passthrough{ true };
};

/*! \brief Literal copy counts and product sharing, the synthesis ledger. */
struct demand_plan
{
  std::vector<uint32_t> realized;                   /* minterm indices, ascending */
  std::vector<std::array<uint32_t, 2>> literal_need; /* [input][polarity]: minterms using that literal */
  std::vector<std::array<uint32_t, 2>> plane_copies; /* copies the literal plane must emit */
  std::vector<uint32_t> sharing;                    /* consumers per realized minterm */
};

namespace detail
{

inline void check_spec( minterm_spec const& ms )
{
  if ( ms.n < 1 || ms.n > max_pla_inputs || ms.m < 1 )
  {
    throw std::invalid_argument( "synthesize: spec must have 1..16 inputs and at least 1 output" );
  }
  if ( ms.per_output.size() != ms.m )
  {
    throw std::invalid_argument( "synthesize: per_output size does not match m" );
  }
  for ( auto const& set : ms.per_output )
  {
    for ( size_t i = 0; i < set.size(); ++i )
    {
      if ( set[i] >= ( 1u << ms.n ) || ( i > 0 && set[i] <= set[i - 1] ) )
      {
        throw std::invalid_argument( "synthesize: minterm sets must be sorted, unique, < 2^n" );
      }
    }
  }
}

inline bool minterm_bit( uint32_t t, unsigned i, unsigned n )
{
  return ( t >> ( n - 1 - i ) ) & 1;
}

} // namespace detail

inline demand_plan compute_demand( minterm_spec const& ms, synth_options const& opts )
{
  detail::check_spec( ms );
  demand_plan plan;

  if ( opts.mode == array_mode::full )
  {
    for ( uint32_t t = 0; t < ( 1u << ms.n ); ++t )
    {
      plan.realized.push_back( t );
    }
  }
  else
  {
    std::vector<bool> used( 1u << ms.n, false );
    for ( auto const& set : ms.per_output )
    {
      for ( auto const t : set )
      {
        used[t] = true;
      }
    }
    for ( uint32_t t = 0; t < used.size(); ++t )
    {
      if ( used[t] )
      {
        plan.realized.push_back( t );
      }
    }
  }

  plan.literal_need.assign( ms.n, { 0, 0 } );
  for ( auto const t : plan.realized )
  {
    for ( unsigned i = 0; i < ms.n; ++i )
    {
      ++plan.literal_need[i][detail::minterm_bit( t, i, ms.n ) ? 1 : 0];
    }
  }
  plan.plane_copies = plan.literal_need;
  if ( opts.reuse_passthrough && ms.n >= 2 )
  {
    /* the first AND cell of every chain regenerates input 0's literal */
    for ( unsigned v = 0; v < 2; ++v )
    {
      if ( plan.plane_copies[0][v] > 1 )
      {
        plan.plane_copies[0][v] = 1;
      }
    }
  }

  std::map<uint32_t, uint32_t> share;
  for ( auto const& set : ms.per_output )
  {
    for ( auto const t : set )
    {
      ++share[t];
    }
  }
  for ( auto const t : plan.realized )
  {
    auto const it = share.find( t );
    plan.sharing.push_back( it == share.end() ? 0 : it->second );
  }
  return plan;
}

struct synthesis_artifacts
{
  netlist nl;
  uint32_t literal_feynman{}; /* complementers + literal-plane copiers */
  uint32_t or_feynman{};      /* product replication copiers */
  uint32_t and_fredkin{};
  uint32_t or_fredkin{};
  uint32_t product_wires{}; /* products entering the OR plane */
};

inline synthesis_artifacts synthesize_detailed( minterm_spec const& ms, synth_options const& opts = {} )
{
  auto const plan = compute_demand( ms, opts );
  synthesis_artifacts art;
  auto& nl = art.nl;
  auto const n = ms.n;

  std::vector<wire_id> pi;
  for ( auto const& name : ms.input_names )
  {
    pi.push_back( nl.add_input( name ) );
  }

  auto make_const = [&]( bool value ) {
    return nl.add_constant( value, nl.fresh_name( "z" ) );
  };
  auto w = [&]() { return nl.fresh_name( "w" ); };

  /* literal plane */
  std::vector<std::array<std::deque<wire_id>, 2>> supply( n );
  auto build_copies = [&]( wire_id base, uint32_t k, std::deque<wire_id>& queue, uint32_t& counter ) {
    if ( k == 1 )
    {
      queue.push_back( base );
      return;
    }
    auto src = base;
    for ( uint32_t j = 1; j < k; ++j )
    {
      auto const outs = nl.add_feynman( src, make_const( false ), w(), w() );
      ++counter;
      queue.push_back( outs[0] );
      src = outs[1];
    }
    queue.push_back( src );
  };

  for ( unsigned i = 0; i < n; ++i )
  {
    auto const neg = plan.plane_copies[i][0];
    auto const pos = plan.plane_copies[i][1];
    auto base_pos = pi[i];
    if ( neg >= 1 )
    {
      auto const outs = nl.add_feynman( pi[i], make_const( true ), w(), w() );
      ++art.literal_feynman;
      base_pos = outs[0];
      build_copies( outs[1], neg, supply[i][0], art.literal_feynman );
    }
    if ( pos >= 1 )
    {
      build_copies( base_pos, pos, supply[i][1], art.literal_feynman );
    }
    /* otherwise base_pos stays unconsumed and is declared garbage below */
  }

  auto pop_supply = [&]( std::deque<wire_id>& queue, char const* what ) {
    if ( queue.empty() )
    {
      throw std::logic_error( std::string( "internal synthesizer error: exhausted supply of " ) + what );
    }
    auto const wid = queue.front();
    queue.pop_front();
    return wid;
  };

  /* AND plane: one chain per realized minterm, ascending */
  std::array<std::deque<wire_id>, 2> reuse_q;
  std::array<uint32_t, 2> remaining{ 0, 0 };
  for ( auto const t : plan.realized )
  {
    ++remaining[detail::minterm_bit( t, 0, n ) ? 1 : 0];
  }
  std::map<uint32_t, wire_id> product;
  for ( auto const t : plan.realized )
  {
    if ( n == 1 )
    {
      auto const v = detail::minterm_bit( t, 0, n ) ? 1 : 0;
      product[t] = pop_supply( supply[0][v], "literal copies" );
      continue;
    }
    auto const v0 = detail::minterm_bit( t, 0, n ) ? 1 : 0;
    --remaining[v0];
    std::vector<wire_id> lits;
    for ( unsigned i = 0; i < n; ++i )
    {
      auto const v = detail::minterm_bit( t, i, n ) ? 1 : 0;
      if ( i == 0 && opts.reuse_passthrough && !reuse_q[v].empty() )
      {
        lits.push_back( pop_supply( reuse_q[v], "reused literals" ) );
      }
      else
      {
        lits.push_back( pop_supply( supply[i][v], "literal copies" ) );
      }
    }
    auto partial = lits[0];
    for ( unsigned j = 1; j < n; ++j )
    {
      auto const outs = nl.add_fredkin( partial, lits[j], make_const( false ), w(), w(), w() );
      ++art.and_fredkin;
      if ( j == 1 && opts.reuse_passthrough && remaining[v0] > 0 )
      {
        reuse_q[v0].push_back( outs[0] ); /* y1 carries input 0's literal */
      }
      partial = outs[2];
    }
    product[t] = partial;
  }
  art.product_wires = static_cast<uint32_t>( plan.realized.size() );

  /* OR plane */
  std::map<uint32_t, std::deque<wire_id>> prod_supply;
  for ( size_t idx = 0; idx < plan.realized.size(); ++idx )
  {
    auto const t = plan.realized[idx];
    auto const s = plan.sharing[idx];
    if ( s >= 1 )
    {
      build_copies( product[t], s, prod_supply[t], art.or_feynman );
    }
  }
  for ( unsigned j = 0; j < ms.m; ++j )
  {
    auto const& terms = ms.per_output[j];
    wire_id out_wire;
    if ( terms.empty() )
    {
      out_wire = make_const( false );
    }
    else
    {
      std::vector<wire_id> ws;
      for ( auto const t : terms )
      {
        ws.push_back( pop_supply( prod_supply[t], "product copies" ) );
      }
      auto or_cell = [&]( wire_id a, wire_id b ) {
        auto const outs = nl.add_fredkin( a, b, make_const( true ), w(), w(), w() );
        ++art.or_fredkin;
        return outs[1];
      };
      if ( opts.topology == or_topology::chain )
      {
        auto acc = ws[0];
        for ( size_t k = 1; k < ws.size(); ++k )
        {
          acc = or_cell( acc, ws[k] );
        }
        out_wire = acc;
      }
      else
      {
        while ( ws.size() > 1 )
        {
          std::vector<wire_id> next;
          for ( size_t k = 0; k + 1 < ws.size(); k += 2 )
          {
            next.push_back( or_cell( ws[k], ws[k + 1] ) );
          }
          if ( ws.size() % 2 )
          {
            next.push_back( ws.back() );
          }
          ws = std::move( next );
        }
        out_wire = ws[0];
      }
    }
    nl.add_output( ms.output_names[j], out_wire );
  }

  /* every unconsumed non-output wire becomes garbage, declaration order */
  std::vector<bool> consumed( nl.num_wires(), false ), bound( nl.num_wires(), false );
  for ( auto const& g : nl.gates() )
  {
    for ( auto const wid : g.inputs )
    {
      consumed[wid] = true;
    }
  }
  for ( auto const& [name, wid] : nl.primary_outputs() )
  {
    (void)name;
    bound[wid] = true;
  }
  for ( wire_id wid = 0; wid < nl.num_wires(); ++wid )
  {
    if ( !consumed[wid] && !bound[wid] )
    {
      nl.add_garbage( wid );
    }
  }

  if ( auto const diags = validate( nl ); !diags.empty() )
  {
    throw std::logic_error( "internal synthesizer error: " + diags.front() );
  }
  return art;
}

inline netlist synthesize( minterm_spec const& ms, synth_options const& opts = {} )
{
  return synthesize_detailed( ms, opts ).nl;
}

struct cost_breakdown
{
  cost_report total;
  uint32_t literal_feynman{};
  uint32_t or_feynman{};
  uint32_t and_fredkin{};
  uint32_t or_fredkin{};
  uint32_t product_wires{};
};

/*! \brief Cost accounting from the demand ledger, without building a netlist.
 *
 * Counts are closed-form: every gate consumes as many wires as it produces,
 * so the terminal wire count is n + ancillas and garbage = n + ancillas - m;
 * ancillas are all declared before the first gate, so width = n + ancillas.
 * Depth replays the copy-assignment policy over integers only.
 */
inline cost_breakdown predicted_costs_detailed( minterm_spec const& ms, synth_options const& opts = {} )
{
  auto const plan = compute_demand( ms, opts );
  auto const n = ms.n;
  cost_breakdown bd;

  uint32_t complementers = 0, lit_copiers = 0;
  for ( unsigned i = 0; i < n; ++i )
  {
    if ( plan.plane_copies[i][0] >= 1 )
    {
      ++complementers;
    }
    for ( unsigned v = 0; v < 2; ++v )
    {
      if ( plan.plane_copies[i][v] >= 1 )
      {
        lit_copiers += plan.plane_copies[i][v] - 1;
      }
    }
  }
  uint32_t const and_cells = static_cast<uint32_t>( plan.realized.size() ) * ( n - 1 );
  uint32_t or_copiers = 0;
  for ( auto const s : plan.sharing )
  {
    if ( s >= 1 )
    {
      or_copiers += s - 1;
    }
  }
  uint32_t or_cells = 0, empty_outputs = 0;
  for ( auto const& set : ms.per_output )
  {
    if ( set.empty() )
    {
      ++empty_outputs;
    }
    else
    {
      or_cells += static_cast<uint32_t>( set.size() ) - 1;
    }
  }

  bd.literal_feynman = complementers + lit_copiers;
  bd.or_feynman = or_copiers;
  bd.and_fredkin = and_cells;
  bd.or_fredkin = or_cells;
  bd.product_wires = static_cast<uint32_t>( plan.realized.size() );

  auto& total = bd.total;
  total.feynman_count = bd.literal_feynman + or_copiers;
  total.fredkin_count = and_cells + or_cells;
  total.ancilla_count = lit_copiers + or_copiers + and_cells + empty_outputs /* const 0 */
                        + complementers + or_cells;                          /* const 1 */
  total.garbage_count = n + total.ancilla_count - ms.m;
  total.width = n + total.ancilla_count;

  /* depth shadow: same FIFO assignment, depths instead of wires */
  uint32_t max_depth = 0;
  auto push_copies = [&]( uint32_t base, uint32_t k, std::deque<uint32_t>& queue ) {
    if ( k == 1 )
    {
      queue.push_back( base );
      return;
    }
    for ( uint32_t j = 1; j < k; ++j )
    {
      queue.push_back( base + j );
      max_depth = std::max( max_depth, base + j );
    }
    queue.push_back( base + k - 1 );
  };

  std::vector<std::array<std::deque<uint32_t>, 2>> supply( n );
  for ( unsigned i = 0; i < n; ++i )
  {
    auto const neg = plan.plane_copies[i][0];
    auto const pos = plan.plane_copies[i][1];
    uint32_t base_pos = 0;
    if ( neg >= 1 )
    {
      max_depth = std::max( max_depth, 1u );
      base_pos = 1;
      push_copies( 1, neg, supply[i][0] );
    }
    if ( pos >= 1 )
    {
      push_copies( base_pos, pos, supply[i][1] );
    }
  }

  std::array<std::deque<uint32_t>, 2> reuse_q;
  std::array<uint32_t, 2> remaining{ 0, 0 };
  for ( auto const t : plan.realized )
  {
    ++remaining[detail::minterm_bit( t, 0, n ) ? 1 : 0];
  }
  std::map<uint32_t, uint32_t> product_depth;
  for ( auto const t : plan.realized )
  {
    if ( n == 1 )
    {
      auto const v = detail::minterm_bit( t, 0, n ) ? 1 : 0;
      product_depth[t] = supply[0][v].front();
      supply[0][v].pop_front();
      continue;
    }
    auto const v0 = detail::minterm_bit( t, 0, n ) ? 1 : 0;
    --remaining[v0];
    std::vector<uint32_t> depths;
    for ( unsigned i = 0; i < n; ++i )
    {
      auto const v = detail::minterm_bit( t, i, n ) ? 1 : 0;
      auto& q = ( i == 0 && opts.reuse_passthrough && !reuse_q[v].empty() ) ? reuse_q[v] : supply[i][v];
      depths.push_back( q.front() );
      q.pop_front();
    }
    auto pd = depths[0];
    for ( unsigned j = 1; j < n; ++j )
    {
      pd = std::max( pd, depths[j] ) + 1;
      max_depth = std::max( max_depth, pd );
      if ( j == 1 && opts.reuse_passthrough && remaining[v0] > 0 )
      {
        reuse_q[v0].push_back( pd );
      }
    }
    product_depth[t] = pd;
  }

  std::map<uint32_t, std::deque<uint32_t>> prod_supply;
  for ( size_t idx = 0; idx < plan.realized.size(); ++idx )
  {
    if ( plan.sharing[idx] >= 1 )
    {
      push_copies( product_depth[plan.realized[idx]], plan.sharing[idx], prod_supply[plan.realized[idx]] );
    }
  }
  for ( unsigned j = 0; j < ms.m; ++j )
  {
    auto const& terms = ms.per_output[j];
    if ( terms.empty() )
    {
      continue;
    }
    std::vector<uint32_t> ds;
    for ( auto const t : terms )
    {
      ds.push_back( prod_supply[t].front() );
      prod_supply[t].pop_front();
    }
    if ( opts.topology == or_topology::chain )
    {
      auto acc = ds[0];
      for ( size_t k = 1; k < ds.size(); ++k )
      {
        acc = std::max( acc, ds[k] ) + 1;
        max_depth = std::max( max_depth, acc );
      }
    }
    else
    {
      while ( ds.size() > 1 )
      {
        std::vector<uint32_t> next;
        for ( size_t k = 0; k + 1 < ds.size(); k += 2 )
        {
          next.push_back( std::max( ds[k], ds[k + 1] ) + 1 );
          max_depth = std::max( max_depth, next.back() );
        }
        if ( ds.size() % 2 )
        {
          next.push_back( ds.back() );
        }
        ds = std::move( next );
      }
    }
  }
  total.depth = max_depth;
  return bd;
}

inline cost_report predicted_costs( minterm_spec const& ms, synth_options const& opts = {} )
{
  return predicted_costs_detailed( ms, opts ).total;
}

} // namespace rpla
