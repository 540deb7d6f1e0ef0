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
  \file gate.hpp
  \brief Fredkin and Feynman gate semantics and their permutation tables
*/

#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace rpla
{

enum class gate_kind : uint8_t
{
  fredkin, /* 3-in/3-out, conservative */
  feynman  /* 2-in/2-out, one-through */
};

inline constexpr unsigned arity_of( gate_kind kind ) noexcept
{
  return kind == gate_kind::fredkin ? 3u : 2u;
}

/*! \brief Fredkin gate: control x1 swaps x2 and x3. */
inline constexpr std::array<bool, 3> apply_fredkin( bool x1, bool x2, bool x3 ) noexcept
{
  bool const y2 = ( !x1 && x2 ) || ( x1 && x3 );
  bool const y3 = ( x1 && x2 ) || ( !x1 && x3 );
  return { x1, y2, y3 };
}

/*! \brief Feynman gate: y1 = x1, y2 = x1 XOR x2. */
inline constexpr std::array<bool, 2> apply_feynman( bool x1, bool x2 ) noexcept
{
  return { x1, x1 != x2 };
}

/*! \brief Total map over a k-bit input space, one output code per input code.
 *
 * Codes order bits most-significant-first: x1 is the MSB.
 */
struct permutation_table
{
  unsigned arity{};
  std::vector<uint8_t> entries; /* entries[input code] = output code; size 2^arity */

  uint8_t size() const noexcept { return static_cast<uint8_t>( entries.size() ); }
};

/*! \brief Tabulates the gate equations over the full input space. */
inline permutation_table permutation_of( gate_kind kind )
{
  permutation_table table;
  table.arity = arity_of( kind );
  table.entries.resize( 1u << table.arity );
  for ( unsigned code = 0; code < table.entries.size(); ++code )
  {
    if ( kind == gate_kind::fredkin )
    {
      auto const y = apply_fredkin( ( code >> 2 ) & 1, ( code >> 1 ) & 1, code & 1 );
      table.entries[code] = static_cast<uint8_t>( ( y[0] << 2 ) | ( y[1] << 1 ) | y[2] );
    }
    else
    {
      auto const y = apply_feynman( ( code >> 1 ) & 1, code & 1 );
      table.entries[code] = static_cast<uint8_t>( ( y[0] << 1 ) | y[1] );
    }
  }
  return table;
}

/*! \brief True iff no two inputs map to the same output. */
inline bool is_bijective( permutation_table const& table )
{
  std::vector<bool> seen( table.entries.size(), false );
  for ( auto const out : table.entries )
  {
    if ( out >= table.entries.size() || seen[out] )
    {
      return false;
    }
    seen[out] = true;
  }
  return true;
}

/*! \brief True iff every entry preserves the number of 1-bits. */
inline bool is_conservative( permutation_table const& table )
{
  for ( unsigned code = 0; code < table.entries.size(); ++code )
  {
    if ( __builtin_popcount( code ) != __builtin_popcount( table.entries[code] ) )
    {
      return false;
    }
  }
  return true;
}

/*! \brief True iff applying the table twice is the identity.
 *
 * Throws std::invalid_argument on a non-bijective table.
 */
inline bool is_self_inverse( permutation_table const& table )
{
  if ( !is_bijective( table ) )
  {
    throw std::invalid_argument( "is_self_inverse: table is not bijective" );
  }
  for ( unsigned code = 0; code < table.entries.size(); ++code )
  {
    if ( table.entries[table.entries[code]] != code )
    {
      return false;
    }
  }
  return true;
}

} // namespace rpla
