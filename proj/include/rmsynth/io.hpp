/*!
  \file io.hpp
  \brief Text formats for PPRM expressions and truth tables

  `.pprm` files hold an optional `vars: <n>` header; every other non-blank
  line is part of the expression and lines are joined by XOR. `#` starts a
  comment that runs to the end of the line.

  Truth-table files hold a `vars: <n>` header followed by one line of 2^n
  characters from {0,1}, index 0 first.
*/

#pragma once

#include "errors.hpp"
#include "pprm.hpp"
#include "truth_table.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace rmsynth
{

namespace detail
{

inline std::string strip_comment( std::string const& line )
{
  auto const hash = line.find( '#' );
  auto s = hash == std::string::npos ? line : line.substr( 0, hash );
  auto const first = s.find_first_not_of( " \t\r" );
  if ( first == std::string::npos )
    return {};
  auto const last = s.find_last_not_of( " \t\r" );
  return s.substr( first, last - first + 1u );
}

/*! Returns the value of a `vars:` header, or nullopt if `line` is not one. */
inline std::optional<uint32_t> parse_vars_header( std::string const& line, uint32_t line_no )
{
  if ( line.rfind( "vars:", 0 ) != 0 )
    return std::nullopt;
  auto rest = line.substr( 5 );
  auto const first = rest.find_first_not_of( " \t" );
  if ( first == std::string::npos )
    throw parse_error( "missing variable count in header", line_no, 6u );
  rest = rest.substr( first );
  if ( rest.find_first_not_of( "0123456789" ) != std::string::npos || rest.size() > 3u )
    throw parse_error( "malformed variable count '" + rest + "'", line_no, 6u );
  auto const n = static_cast<uint32_t>( std::stoul( rest ) );
  if ( n > max_indices )
    throw parse_error( "variable count exceeds 64", line_no, 6u );
  return n;
}

/*! Lines with comments stripped, paired with their 1-based line numbers; blank lines dropped. */
inline std::vector<std::pair<uint32_t, std::string>> content_lines( std::string const& text )
{
  std::vector<std::pair<uint32_t, std::string>> out;
  std::istringstream in( text );
  std::string line;
  uint32_t line_no = 0u;
  while ( std::getline( in, line ) )
  {
    ++line_no;
    auto s = strip_comment( line );
    if ( !s.empty() )
      out.emplace_back( line_no, std::move( s ) );
  }
  return out;
}

} // namespace detail

/*!
  \brief Parses the contents of a `.pprm` file.

  `num_vars` (when non-negative) overrides the variable count; it must agree
  with a header if both are present.
*/
inline pprm_expr read_pprm( std::string const& text, int num_vars = -1 )
{
  auto lines = detail::content_lines( text );
  std::optional<uint32_t> header;
  if ( !lines.empty() )
  {
    header = detail::parse_vars_header( lines.front().second, lines.front().first );
    if ( header )
      lines.erase( lines.begin() );
  }
  if ( header && num_vars >= 0 && static_cast<uint32_t>( num_vars ) != *header )
  {
    throw parse_error( "header declares " + std::to_string( *header ) + " variables but " +
                       std::to_string( num_vars ) + " were requested" );
  }
  int const n = header ? static_cast<int>( *header ) : num_vars;
  if ( lines.empty() )
  {
    throw parse_error( "empty expression", header ? 2u : 1u );
  }

  std::vector<minterm> terms;
  uint32_t needed = 0u;
  for ( auto const& [line_no, body] : lines )
  {
    try
    {
      auto part = parse_pprm( body, n );
      needed = std::max( needed, part.num_vars() );
      terms.insert( terms.end(), part.terms().begin(), part.terms().end() );
    }
    catch ( parse_error const& e )
    {
      throw e.at_line( line_no );
    }
  }
  return pprm_expr( n >= 0 ? static_cast<uint32_t>( n ) : needed, std::move( terms ) );
}

/*! \brief Canonical `.pprm` text: header line then the formatted expression. */
inline std::string write_pprm( pprm_expr const& e )
{
  return "vars: " + std::to_string( e.num_vars() ) + "\n" + format_pprm( e ) + "\n";
}

inline truth_table read_truth_table( std::string const& text )
{
  auto lines = detail::content_lines( text );
  if ( lines.empty() )
    throw parse_error( "missing 'vars:' header", 1u );
  auto const header = detail::parse_vars_header( lines.front().second, lines.front().first );
  if ( !header )
    throw parse_error( "missing 'vars:' header", lines.front().first, 1u );
  if ( *header > max_table_vars )
    throw parse_error( "truth tables are limited to " + std::to_string( max_table_vars ) + " variables",
                       lines.front().first );
  if ( lines.size() != 2u )
    throw parse_error( "expected exactly one line of table bits", lines.size() < 2u ? lines.front().first + 1u : lines[2].first );

  auto const& [line_no, bits] = lines[1];
  auto const expected = uint64_t( 1 ) << *header;
  if ( auto bad = bits.find_first_not_of( "01" ); bad != std::string::npos )
    throw parse_error( "table bits must be 0 or 1", line_no, static_cast<uint32_t>( bad + 1u ) );
  if ( bits.size() != expected )
    throw parse_error( "expected " + std::to_string( expected ) + " table bits, got " + std::to_string( bits.size() ),
                       line_no );
  return truth_table::from_bit_string( *header, bits );
}

inline std::string write_truth_table( truth_table const& t )
{
  return "vars: " + std::to_string( t.num_vars() ) + "\n" + t.to_bit_string() + "\n";
}

inline std::string read_text_file( std::string const& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
    throw std::runtime_error( "cannot open '" + path + "'" );
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file( std::string const& path, std::string const& content )
{
  std::ofstream out( path, std::ios::binary );
  if ( !out )
    throw std::runtime_error( "cannot write '" + path + "'" );
  out << content;
}

} // namespace rmsynth
