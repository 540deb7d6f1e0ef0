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
  \file netlist_io.hpp
  \brief Line-based .rnl text format for reversible netlists
*/

#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "netlist.hpp"

namespace rpla
{

class rnl_parse_error : public std::runtime_error
{
public:
  rnl_parse_error( unsigned line, std::string const& what )
      : std::runtime_error( "line " + std::to_string( line ) + ": " + what ), line_( line )
  {
  }

  unsigned line() const noexcept { return line_; }

private:
  unsigned line_;
};

/*! \brief Serializes a netlist; deterministic, lines in netlist order. */
inline std::string emit_netlist( netlist const& nl )
{
  std::ostringstream os;
  for ( auto const w : nl.primary_inputs() )
  {
    os << "input " << nl.wire_name( w ) << '\n';
  }
  for ( auto const& a : nl.ancillas() )
  {
    os << "const " << ( a.value ? '1' : '0' ) << ' ' << nl.wire_name( a.wire ) << '\n';
  }
  for ( auto const& g : nl.gates() )
  {
    os << ( g.kind == gate_kind::fredkin ? "fredkin" : "feynman" );
    for ( auto const w : g.inputs )
    {
      os << ' ' << nl.wire_name( w );
    }
    os << " ->";
    for ( auto const w : g.outputs )
    {
      os << ' ' << nl.wire_name( w );
    }
    os << '\n';
  }
  for ( auto const& [name, w] : nl.primary_outputs() )
  {
    os << "output " << name << ' ' << nl.wire_name( w ) << '\n';
  }
  for ( auto const w : nl.garbage() )
  {
    os << "garbage " << nl.wire_name( w ) << '\n';
  }
  return os.str();
}

/*! \brief Parses the .rnl grammar; declare-before-use is enforced while reading. */
inline netlist parse_netlist( std::string const& text )
{
  netlist nl;
  std::istringstream is( text );
  std::string line;
  unsigned lineno = 0;

  auto resolve = [&]( std::string const& name, unsigned ln ) {
    auto const w = nl.wire_by_name( name );
    if ( w == null_wire )
    {
      throw rnl_parse_error( ln, "reference to undeclared wire '" + name + "'" );
    }
    return w;
  };
  auto check_new = [&]( std::string const& name, unsigned ln ) {
    if ( !is_valid_identifier( name ) )
    {
      throw rnl_parse_error( ln, "invalid identifier '" + name + "'" );
    }
    if ( nl.has_wire( name ) )
    {
      throw rnl_parse_error( ln, "redeclaration of wire '" + name + "'" );
    }
  };

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
    auto const& kw = tok[0];
    if ( kw == "input" )
    {
      if ( tok.size() != 2 )
      {
        throw rnl_parse_error( lineno, "expected: input <name>" );
      }
      check_new( tok[1], lineno );
      nl.add_input( tok[1] );
    }
    else if ( kw == "const" )
    {
      if ( tok.size() != 3 || ( tok[1] != "0" && tok[1] != "1" ) )
      {
        throw rnl_parse_error( lineno, "expected: const <0|1> <name>" );
      }
      check_new( tok[2], lineno );
      nl.add_constant( tok[1] == "1", tok[2] );
    }
    else if ( kw == "fredkin" || kw == "feynman" )
    {
      auto const kind = kw == "fredkin" ? gate_kind::fredkin : gate_kind::feynman;
      auto const k = arity_of( kind );
      if ( tok.size() != 2 + 2 * k || tok[1 + k] != "->" )
      {
        throw rnl_parse_error( lineno, kw + " requires " + std::to_string( k ) +
                                           " inputs, '->', and " + std::to_string( k ) + " outputs" );
      }
      std::vector<wire_id> ins;
      for ( unsigned i = 0; i < k; ++i )
      {
        ins.push_back( resolve( tok[1 + i], lineno ) );
      }
      for ( unsigned i = 0; i < k; ++i )
      {
        check_new( tok[2 + k + i], lineno );
      }
      if ( kind == gate_kind::fredkin )
      {
        nl.add_fredkin( ins[0], ins[1], ins[2], tok[5], tok[6], tok[7] );
      }
      else
      {
        nl.add_feynman( ins[0], ins[1], tok[4], tok[5] );
      }
    }
    else if ( kw == "output" )
    {
      if ( tok.size() != 3 )
      {
        throw rnl_parse_error( lineno, "expected: output <name> <wire>" );
      }
      nl.add_output( tok[1], resolve( tok[2], lineno ) );
    }
    else if ( kw == "garbage" )
    {
      if ( tok.size() != 2 )
      {
        throw rnl_parse_error( lineno, "expected: garbage <wire>" );
      }
      nl.add_garbage( resolve( tok[1], lineno ) );
    }
    else
    {
      throw rnl_parse_error( lineno, "unknown statement '" + kw + "'" );
    }
  }

  if ( auto const diags = validate( nl ); !diags.empty() )
  {
    throw rnl_parse_error( lineno, "netlist is not structurally valid: " + diags.front() );
  }
  return nl;
}

} // namespace rpla
