/* qmin: C++ exact two-level Boolean minimization library
 * Copyright (C) 2026 qmin contributors
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
  \file io.hpp
  \brief Input formats (minterm spec, single-output PLA) and emitters

  Parsers report the byte offset of the offending token in every error.
  Emitters are deterministic down to the byte: the same report always
  serializes to the same text, which the test suite relies on.
*/

#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cover_selection.hpp"
#include "errors.hpp"
#include "implicant.hpp"

namespace qmin
{

/*! \brief How variables are rendered in expressions. */
enum class naming_style : uint8_t
{
  letters, /*!< A, B, C, ...; limited to 26 variables */
  indexed  /*!< x0, x1, x2, ... */
};

/*! \brief Naming configuration for expression output. */
struct variable_naming
{
  naming_style style{ naming_style::letters };
};

/*! \brief Name of variable \p index under the given naming scheme. */
inline std::string variable_name( variable_naming const& naming, uint32_t index, uint32_t num_vars )
{
  if ( index >= num_vars )
  {
    throw domain_error( "variable index out of range" );
  }
  if ( naming.style == naming_style::letters )
  {
    if ( num_vars > 26u )
    {
      throw domain_error( "letter naming supports at most 26 variables; use indexed naming instead" );
    }
    return std::string( 1u, static_cast<char>( 'A' + index ) );
  }
  return "x" + std::to_string( index );
}

namespace detail
{

inline bool is_space_char( char c )
{
  return c == ' ' || c == '\t' || c == '\r' || c == '\n';
}

inline bool is_digit_char( char c )
{
  return c >= '0' && c <= '9';
}

/*! \brief Minimal cursor over input text with offset-carrying errors. */
struct text_scanner
{
  std::string_view text;
  size_t pos{ 0u };

  bool at_end() const
  {
    return pos >= text.size();
  }

  char peek() const
  {
    return text[pos];
  }

  void skip_space()
  {
    while ( !at_end() && is_space_char( text[pos] ) )
    {
      ++pos;
    }
  }

  bool try_consume( char c )
  {
    if ( !at_end() && text[pos] == c )
    {
      ++pos;
      return true;
    }
    return false;
  }

  void expect( char c )
  {
    if ( !try_consume( c ) )
    {
      throw parse_error( std::string{ "expected '" } + c + "'", pos );
    }
  }

  void expect_keyword( std::string_view keyword )
  {
    if ( text.substr( pos, keyword.size() ) != keyword )
    {
      throw parse_error( "expected '" + std::string{ keyword } + "'", pos );
    }
    pos += keyword.size();
  }

  uint64_t expect_number()
  {
    if ( at_end() || !is_digit_char( peek() ) )
    {
      throw parse_error( "expected a number", pos );
    }
    uint64_t value{};
    auto const result = std::from_chars( text.data() + pos, text.data() + text.size(), value );
    if ( result.ec != std::errc{} )
    {
      throw parse_error( "number is out of range", pos );
    }
    pos = static_cast<size_t>( result.ptr - text.data() );
    return value;
  }
};

/*! \brief Parses a comma-separated, strictly ascending index list. */
inline std::vector<std::pair<uint64_t, size_t>> parse_index_list( text_scanner& scanner, uint32_t num_vars,
                                                                  char const* label )
{
  std::vector<std::pair<uint64_t, size_t>> items;
  uint64_t const bound = variable_mask( num_vars );

  scanner.skip_space();
  if ( scanner.at_end() || !is_digit_char( scanner.peek() ) )
  {
    return items; /* empty list */
  }
  while ( true )
  {
    size_t const item_pos = scanner.pos;
    uint64_t const value = scanner.expect_number();
    if ( value > bound )
    {
      throw parse_error( std::string{ label } + " " + std::to_string( value ) + " is out of range for " +
                             std::to_string( num_vars ) + " variables",
                         item_pos );
    }
    if ( !items.empty() && value <= items.back().first )
    {
      throw parse_error( std::string{ label } + " indices are not strictly ascending", item_pos );
    }
    items.emplace_back( value, item_pos );
    scanner.skip_space();
    if ( !scanner.try_consume( ',' ) )
    {
      break;
    }
    scanner.skip_space();
    if ( scanner.at_end() || !is_digit_char( scanner.peek() ) )
    {
      throw parse_error( "expected a number after ','", scanner.pos );
    }
  }
  return items;
}

} // namespace detail

/*! \brief Parses the minterm specification format.
 *
 * Grammar (whitespace-tolerant):
 * ```
 * vars=<n>; minterms=<i1,i2,...>; dontcares=<j1,j2,...>
 * ```
 * The minterm list names every assignment where the function may be 1; the
 * don't-care list marks the subset of those where it need not be.  Both
 * lists are strictly ascending.  The resulting onset is the minterm list
 * minus the don't-cares; when that difference is empty the input is
 * rejected unless \p allow_empty_onset is set, since an all-don't-care
 * function is almost always a mistake.
 */
inline problem_spec parse_minterm_spec( std::string_view text, bool allow_empty_onset = false )
{
  detail::text_scanner scanner{ text };

  scanner.skip_space();
  scanner.expect_keyword( "vars" );
  scanner.skip_space();
  scanner.expect( '=' );
  scanner.skip_space();
  size_t const vars_pos = scanner.pos;
  uint64_t const vars = scanner.expect_number();
  if ( vars < 1u )
  {
    throw parse_error( "the number of variables must be at least 1", vars_pos );
  }
  if ( vars > max_variables )
  {
    throw parse_error( "the number of variables exceeds the supported maximum of " +
                           std::to_string( max_variables ),
                       vars_pos );
  }
  auto const num_vars = static_cast<uint32_t>( vars );
  scanner.skip_space();
  scanner.expect( ';' );

  scanner.skip_space();
  scanner.expect_keyword( "minterms" );
  scanner.skip_space();
  scanner.expect( '=' );
  auto const minterms = detail::parse_index_list( scanner, num_vars, "minterm" );
  if ( minterms.empty() )
  {
    throw parse_error( "expected at least one minterm", scanner.pos );
  }
  scanner.skip_space();
  scanner.expect( ';' );

  scanner.skip_space();
  scanner.expect_keyword( "dontcares" );
  scanner.skip_space();
  scanner.expect( '=' );
  size_t const dontcares_pos = scanner.pos;
  auto const dontcares = detail::parse_index_list( scanner, num_vars, "don't-care" );
  scanner.skip_space();
  scanner.try_consume( ';' );
  scanner.skip_space();
  if ( !scanner.at_end() )
  {
    throw parse_error( "unexpected trailing input", scanner.pos );
  }

  std::vector<uint64_t> minterm_values;
  minterm_values.reserve( minterms.size() );
  for ( auto const& [value, position] : minterms )
  {
    minterm_values.push_back( value );
  }

  std::vector<uint64_t> dontcare_values;
  dontcare_values.reserve( dontcares.size() );
  for ( auto const& [value, position] : dontcares )
  {
    if ( !std::binary_search( minterm_values.begin(), minterm_values.end(), value ) )
    {
      throw parse_error( "don't-care " + std::to_string( value ) + " does not appear in the minterm list",
                         position );
    }
    dontcare_values.push_back( value );
  }

  std::vector<uint64_t> onset;
  std::set_difference( minterm_values.begin(), minterm_values.end(), dontcare_values.begin(),
                       dontcare_values.end(), std::back_inserter( onset ) );
  if ( onset.empty() && !allow_empty_onset )
  {
    throw parse_error( "every minterm is a don't-care, leaving an empty onset; "
                       "pass the empty-onset option to accept a constant-0 function",
                       dontcares_pos );
  }
  return problem_spec{ num_vars, std::move( onset ), std::move( dontcare_values ) };
}

namespace detail
{

inline std::vector<std::pair<std::string_view, size_t>> split_tokens( std::string_view line, size_t base )
{
  std::vector<std::pair<std::string_view, size_t>> tokens;
  size_t i = 0u;
  while ( i < line.size() )
  {
    while ( i < line.size() && ( line[i] == ' ' || line[i] == '\t' ) )
    {
      ++i;
    }
    size_t const start = i;
    while ( i < line.size() && line[i] != ' ' && line[i] != '\t' )
    {
      ++i;
    }
    if ( i > start )
    {
      tokens.emplace_back( line.substr( start, i - start ), base + start );
    }
  }
  return tokens;
}

inline uint64_t directive_number( std::pair<std::string_view, size_t> const& token )
{
  text_scanner scanner{ token.first };
  uint64_t const value = scanner.expect_number();
  if ( !scanner.at_end() )
  {
    throw parse_error( "malformed number", token.second );
  }
  return value;
}

} // namespace detail

/*! \brief Parses the single-output PLA subset.
 *
 * Supported lines: `.i <n>`, `.o 1`, `.p <count>` (ignored), `.e`/`.end`,
 * comments introduced by `#`, and cube lines `<n input chars> <output>`
 * with inputs over {0, 1, -} and output `1` (onset cube) or `-` (don't-care
 * cube).  Cubes are expanded to explicit minterms; a minterm reached by
 * both an onset cube and a don't-care cube counts as onset.  Inputs wider
 * than \p max_vars are refused up front, before any cube is expanded.
 */
inline problem_spec parse_pla( std::string_view text, uint32_t max_vars = max_variables )
{
  std::optional<uint32_t> num_vars;
  std::vector<uint64_t> onset;
  std::vector<uint64_t> dontcare;

  size_t offset = 0u;
  bool ended = false;
  while ( offset < text.size() && !ended )
  {
    size_t eol = text.find( '\n', offset );
    if ( eol == std::string_view::npos )
    {
      eol = text.size();
    }
    std::string_view line = text.substr( offset, eol - offset );
    size_t const line_pos = offset;
    offset = eol + 1u;

    if ( auto const hash = line.find( '#' ); hash != std::string_view::npos )
    {
      line = line.substr( 0u, hash );
    }
    auto const tokens = detail::split_tokens( line, line_pos );
    if ( tokens.empty() )
    {
      continue;
    }

    if ( tokens.front().first.front() == '.' )
    {
      auto const& directive = tokens.front();
      if ( directive.first == ".i" )
      {
        if ( num_vars )
        {
          throw parse_error( "duplicate .i directive", directive.second );
        }
        if ( tokens.size() != 2u )
        {
          throw parse_error( ".i expects exactly one argument", directive.second );
        }
        uint64_t const declared = detail::directive_number( tokens[1] );
        if ( declared < 1u || declared > max_variables )
        {
          throw parse_error( ".i must declare between 1 and " + std::to_string( max_variables ) +
                                 " inputs",
                             tokens[1].second );
        }
        if ( declared > max_vars )
        {
          throw capacity_error( "PLA declares " + std::to_string( declared ) +
                                " inputs, above the configured bound of " + std::to_string( max_vars ) );
        }
        num_vars = static_cast<uint32_t>( declared );
      }
      else if ( directive.first == ".o" )
      {
        if ( tokens.size() != 2u || detail::directive_number( tokens[1] ) != 1u )
        {
          throw parse_error( ".o must declare exactly one output", directive.second );
        }
      }
      else if ( directive.first == ".p" )
      {
        if ( tokens.size() != 2u )
        {
          throw parse_error( ".p expects exactly one argument", directive.second );
        }
        detail::directive_number( tokens[1] ); /* informational; not trusted */
      }
      else if ( directive.first == ".e" || directive.first == ".end" )
      {
        if ( tokens.size() != 1u )
        {
          throw parse_error( "unexpected text after " + std::string{ directive.first }, directive.second );
        }
        ended = true;
      }
      else
      {
        throw parse_error( "unsupported directive '" + std::string{ directive.first } + "'",
                           directive.second );
      }
      continue;
    }

    /* cube line */
    if ( !num_vars )
    {
      throw parse_error( "cube line appears before .i", tokens.front().second );
    }
    if ( tokens.size() != 2u )
    {
      throw parse_error( "cube line must have an input part and an output part", tokens.front().second );
    }
    auto const& [inputs, inputs_pos] = tokens[0];
    auto const& [output, output_pos] = tokens[1];
    if ( inputs.size() != *num_vars )
    {
      throw parse_error( "cube has " + std::to_string( inputs.size() ) + " input positions, expected " +
                             std::to_string( *num_vars ),
                         inputs_pos );
    }

    uint64_t value = 0u, dashes = 0u;
    for ( uint32_t i = 0u; i < *num_vars; ++i )
    {
      uint64_t const bit = uint64_t( 1 ) << ( *num_vars - 1u - i );
      switch ( inputs[i] )
      {
      case '0':
        break;
      case '1':
        value |= bit;
        break;
      case '-':
        dashes |= bit;
        break;
      default:
        throw parse_error( std::string{ "invalid cube character '" } + inputs[i] + "'", inputs_pos + i );
      }
    }

    std::vector<uint64_t>* target = nullptr;
    if ( output == "1" )
    {
      target = &onset;
    }
    else if ( output == "-" )
    {
      target = &dontcare;
    }
    else
    {
      throw parse_error( "output must be '1' or '-'", output_pos );
    }

    uint64_t subset = 0u;
    while ( true )
    {
      target->push_back( value | subset );
      if ( subset == dashes )
      {
        break;
      }
      subset = ( subset - dashes ) & dashes;
    }
  }

  if ( !num_vars )
  {
    throw parse_error( "missing .i directive", 0u );
  }

  std::sort( onset.begin(), onset.end() );
  onset.erase( std::unique( onset.begin(), onset.end() ), onset.end() );
  std::sort( dontcare.begin(), dontcare.end() );
  dontcare.erase( std::unique( dontcare.begin(), dontcare.end() ), dontcare.end() );

  /* onset wins where cubes of both kinds overlap */
  std::vector<uint64_t> dontcare_only;
  std::set_difference( dontcare.begin(), dontcare.end(), onset.begin(), onset.end(),
                       std::back_inserter( dontcare_only ) );

  problem_spec problem{ *num_vars, std::move( onset ), std::move( dontcare_only ) };
  validate_problem( problem );
  return problem;
}

/*! \brief Renders a cover as a sum-of-products expression.
 *
 * An empty cover prints as `0` and the tautology cover as `1`.  A negated
 * variable carries a trailing apostrophe: `B'D + BD' + C'D`.
 */
inline std::string emit_expression( cover const& sop, variable_naming const& naming = {} )
{
  if ( sop.implicants.empty() )
  {
    return "0";
  }
  if ( naming.style == naming_style::letters && sop.num_vars > 26u )
  {
    throw domain_error( "letter naming supports at most 26 variables; use indexed naming instead" );
  }

  std::string text;
  bool first = true;
  for ( auto const& imp : sop.implicants )
  {
    if ( !first )
    {
      text += " + ";
    }
    first = false;
    if ( is_tautology( imp ) )
    {
      text += "1";
      continue;
    }
    for ( uint32_t i = 0u; i < sop.num_vars; ++i )
    {
      uint64_t const bit = uint64_t( 1 ) << ( sop.num_vars - 1u - i );
      if ( imp.dashes & bit )
      {
        continue;
      }
      text += variable_name( naming, i, sop.num_vars );
      if ( !( imp.value & bit ) )
      {
        text += '\'';
      }
    }
  }
  return text;
}

namespace detail
{

inline std::string pla_cube_text( implicant const& imp )
{
  auto text = qmin::to_string( imp );
  std::replace( text.begin(), text.end(), 'X', '-' );
  return text;
}

} // namespace detail

/*! \brief Renders a cover in the single-output PLA subset.
 *
 * The output round-trips through parse_pla: re-parsing yields exactly the
 * minterms the cover covers, as onset, with no don't-cares.
 */
inline std::string emit_pla( cover const& sop )
{
  std::string text;
  text += ".i " + std::to_string( sop.num_vars ) + "\n";
  text += ".o 1\n";
  text += ".p " + std::to_string( sop.implicants.size() ) + "\n";
  for ( auto const& imp : sop.implicants )
  {
    text += detail::pla_cube_text( imp ) + " 1\n";
  }
  text += ".e\n";
  return text;
}

/*! \brief Serializes a minimization report as JSON.
 *
 * Key order is fixed and arrays follow the deterministic orders of the
 * report, so equal reports serialize to identical bytes.
 */
inline std::string emit_json( minimize_report const& report )
{
  auto cube_strings = []( std::vector<implicant> const& implicants ) {
    std::vector<std::string> strings;
    strings.reserve( implicants.size() );
    for ( auto const& imp : implicants )
    {
      strings.push_back( to_string( imp ) );
    }
    return strings;
  };

  nlohmann::ordered_json problem;
  problem["vars"] = report.problem.num_vars;
  problem["onset"] = report.problem.onset;
  problem["dontcares"] = report.problem.dontcare;

  nlohmann::ordered_json reduced;
  reduced["columns"] = report.reduced.columns;
  reduced["rows"] = cube_strings( report.reduced.rows );

  nlohmann::ordered_json cost;
  cost["terms"] = report.result.cost.terms;
  cost["literals"] = report.result.cost.literals;

  nlohmann::ordered_json root;
  root["problem"] = problem;
  root["primes"] = cube_strings( report.primes );
  root["essentials"] = cube_strings( report.essentials );
  root["reduced_chart"] = reduced;
  root["cover"] = cube_strings( report.result.implicants );
  root["cost"] = cost;
  return root.dump( 2 );
}

} // namespace qmin
