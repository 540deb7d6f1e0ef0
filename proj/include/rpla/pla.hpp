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
  \file pla.hpp
  \brief Berkeley-style PLA frontend and the truth-table oracle

  Cubes use the usual encoding: per-input literal 0/1/- and per-output
  mark, where only '1' adds coverage (OR-plane semantics).  Minterm
  index convention: the first input (first .ilb name) is the most
  significant bit.
*/

#pragma once

#include <cstdint>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace rpla
{

/* exhaustive oracle and verifier bound */
inline constexpr unsigned max_pla_inputs = 16;

enum class pla_literal : uint8_t
{
  zero,
  one,
  dash
};

struct cube
{
  std::vector<pla_literal> input_part;
  std::vector<bool> output_part; /* true = '1' mark */
};

struct pla_spec
{
  unsigned n{};
  unsigned m{};
  std::vector<std::string> input_names;
  std::vector<std::string> output_names;
  std::vector<cube> cubes;
};

struct minterm_spec
{
  unsigned n{};
  unsigned m{};
  std::vector<std::string> input_names;
  std::vector<std::string> output_names;
  std::vector<std::vector<uint32_t>> per_output; /* sorted, unique, each < 2^n */
};

class pla_parse_error : public std::runtime_error
{
public:
  pla_parse_error( unsigned line, std::string const& what )
      : std::runtime_error( "line " + std::to_string( line ) + ": " + what ), line_( line )
  {
  }

  unsigned line() const noexcept { return line_; }

private:
  unsigned line_;
};

inline pla_spec parse_pla( std::string const& text )
{
  pla_spec spec;
  bool have_i = false, have_o = false, ended = false;
  long declared_products = -1;
  std::istringstream is( text );
  std::string line;
  unsigned lineno = 0;

  while ( std::getline( is, line ) )
  {
    ++lineno;
    if ( auto const hash = line.find( '#' ); hash != std::string::npos )
    {
      line.erase( hash );
    }
    std::istringstream ls( line );
    std::vector<std::string> tok;
    std::string t;
    while ( ls >> t )
    {
      tok.push_back( t );
    }
    if ( tok.empty() )
    {
      continue;
    }
    if ( ended )
    {
      throw pla_parse_error( lineno, "content after .e" );
    }
    if ( tok[0] == ".i" || tok[0] == ".o" || tok[0] == ".p" )
    {
      if ( tok.size() != 2 )
      {
        throw pla_parse_error( lineno, tok[0] + " expects one number" );
      }
      unsigned long value;
      try
      {
        value = std::stoul( tok[1] );
      }
      catch ( std::exception const& )
      {
        throw pla_parse_error( lineno, "bad number '" + tok[1] + "'" );
      }
      if ( tok[0] == ".i" )
      {
        if ( value < 1 || value > max_pla_inputs )
        {
          throw pla_parse_error( lineno, ".i must be between 1 and " + std::to_string( max_pla_inputs ) );
        }
        spec.n = static_cast<unsigned>( value );
        have_i = true;
      }
      else if ( tok[0] == ".o" )
      {
        if ( value < 1 )
        {
          throw pla_parse_error( lineno, ".o must be at least 1" );
        }
        spec.m = static_cast<unsigned>( value );
        have_o = true;
      }
      else
      {
        declared_products = static_cast<long>( value );
      }
    }
    else if ( tok[0] == ".ilb" || tok[0] == ".ob" )
    {
      auto& names = tok[0] == ".ilb" ? spec.input_names : spec.output_names;
      names.assign( tok.begin() + 1, tok.end() );
    }
    else if ( tok[0] == ".e" )
    {
      ended = true;
    }
    else if ( tok[0][0] == '.' )
    {
      throw pla_parse_error( lineno, "unsupported directive '" + tok[0] + "'" );
    }
    else
    {
      if ( !have_i || !have_o )
      {
        throw pla_parse_error( lineno, "cube before .i/.o declaration" );
      }
      if ( tok.size() != 2 || tok[0].size() != spec.n || tok[1].size() != spec.m )
      {
        throw pla_parse_error( lineno, "cube must have " + std::to_string( spec.n ) +
                                           " input and " + std::to_string( spec.m ) + " output characters" );
      }
      cube c;
      for ( auto const ch : tok[0] )
      {
        switch ( ch )
        {
        case '0':
          c.input_part.push_back( pla_literal::zero );
          break;
        case '1':
          c.input_part.push_back( pla_literal::one );
          break;
        case '-':
          c.input_part.push_back( pla_literal::dash );
          break;
        default:
          throw pla_parse_error( lineno, std::string( "illegal input character '" ) + ch + "'" );
        }
      }
      for ( auto const ch : tok[1] )
      {
        /* only '1' adds coverage; 0/-/~ are "not in this OR plane" */
        if ( ch != '0' && ch != '1' && ch != '-' && ch != '~' )
        {
          throw pla_parse_error( lineno, std::string( "illegal output character '" ) + ch + "'" );
        }
        c.output_part.push_back( ch == '1' );
      }
      spec.cubes.push_back( std::move( c ) );
    }
  }

  if ( !have_i )
  {
    throw pla_parse_error( lineno, "missing .i directive" );
  }
  if ( !have_o )
  {
    throw pla_parse_error( lineno, "missing .o directive" );
  }
  if ( declared_products >= 0 && declared_products != static_cast<long>( spec.cubes.size() ) )
  {
    throw pla_parse_error( lineno, ".p declares " + std::to_string( declared_products ) +
                                       " cubes, file has " + std::to_string( spec.cubes.size() ) );
  }
  if ( !spec.input_names.empty() && spec.input_names.size() != spec.n )
  {
    throw pla_parse_error( lineno, ".ilb name count does not match .i" );
  }
  if ( !spec.output_names.empty() && spec.output_names.size() != spec.m )
  {
    throw pla_parse_error( lineno, ".ob name count does not match .o" );
  }
  if ( spec.input_names.empty() )
  {
    for ( unsigned i = 0; i < spec.n; ++i )
    {
      spec.input_names.push_back( "in" + std::to_string( i ) );
    }
  }
  if ( spec.output_names.empty() )
  {
    for ( unsigned j = 0; j < spec.m; ++j )
    {
      spec.output_names.push_back( "out" + std::to_string( j ) );
    }
  }
  std::set<std::string> uniq( spec.input_names.begin(), spec.input_names.end() );
  uniq.insert( spec.output_names.begin(), spec.output_names.end() );
  if ( uniq.size() != spec.input_names.size() + spec.output_names.size() )
  {
    throw pla_parse_error( lineno, "input/output names are not unique" );
  }
  return spec;
}

/*! \brief Expands dashes and collapses duplicate coverage per output. */
inline minterm_spec expand_to_minterms( pla_spec const& spec )
{
  minterm_spec ms;
  ms.n = spec.n;
  ms.m = spec.m;
  ms.input_names = spec.input_names;
  ms.output_names = spec.output_names;
  auto const rows = 1u << spec.n;
  std::vector<std::vector<bool>> covered( spec.m, std::vector<bool>( rows, false ) );
  for ( auto const& c : spec.cubes )
  {
    /* enumerate completions of the dashes */
    std::vector<unsigned> dash_positions;
    uint32_t base = 0;
    for ( unsigned i = 0; i < spec.n; ++i )
    {
      if ( c.input_part[i] == pla_literal::dash )
      {
        dash_positions.push_back( i );
      }
      else if ( c.input_part[i] == pla_literal::one )
      {
        base |= 1u << ( spec.n - 1 - i );
      }
    }
    for ( uint32_t fill = 0; fill < ( 1u << dash_positions.size() ); ++fill )
    {
      uint32_t index = base;
      for ( size_t d = 0; d < dash_positions.size(); ++d )
      {
        if ( ( fill >> d ) & 1 )
        {
          index |= 1u << ( spec.n - 1 - dash_positions[d] );
        }
      }
      for ( unsigned j = 0; j < spec.m; ++j )
      {
        if ( c.output_part[j] )
        {
          covered[j][index] = true;
        }
      }
    }
  }
  for ( unsigned j = 0; j < spec.m; ++j )
  {
    std::vector<uint32_t> set;
    for ( uint32_t r = 0; r < rows; ++r )
    {
      if ( covered[j][r] )
      {
        set.push_back( r );
      }
    }
    ms.per_output.push_back( std::move( set ) );
  }
  return ms;
}

/*! \brief 2^n x m oracle table, computed independently of the synthesizer. */
inline std::vector<std::vector<bool>> truth_table( pla_spec const& spec )
{
  auto const ms = expand_to_minterms( spec );
  auto const rows = 1u << spec.n;
  std::vector<std::vector<bool>> table( rows, std::vector<bool>( spec.m, false ) );
  for ( unsigned j = 0; j < spec.m; ++j )
  {
    for ( auto const t : ms.per_output[j] )
    {
      table[t][j] = true;
    }
  }
  return table;
}

/*! \brief Minterm sets expressed as a dash-free PLA (one cube per covered minterm). */
inline pla_spec to_pla( minterm_spec const& ms )
{
  pla_spec spec;
  spec.n = ms.n;
  spec.m = ms.m;
  spec.input_names = ms.input_names;
  spec.output_names = ms.output_names;
  for ( unsigned j = 0; j < ms.m; ++j )
  {
    for ( auto const t : ms.per_output[j] )
    {
      cube c;
      for ( unsigned i = 0; i < ms.n; ++i )
      {
        c.input_part.push_back( ( ( t >> ( ms.n - 1 - i ) ) & 1 ) ? pla_literal::one : pla_literal::zero );
      }
      c.output_part.assign( ms.m, false );
      c.output_part[j] = true;
      spec.cubes.push_back( std::move( c ) );
    }
  }
  return spec;
}

} // namespace rpla
