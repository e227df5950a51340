/*!
  \file netlist.hpp
  \brief RevLib-style netlist reader and writer

  \verbatim
  .numvars 5
  .variables x0 x1 x2 x3 f
  .begin
  t1 f
  t3 x2 x3 f
  .end
  \endverbatim

  A gate line `t<k>` lists k wire names: the controls followed by the
  target. `#` starts a comment. Directives other than the four shown are
  rejected. The writer always names inputs `x<i>` and the last wire `f`;
  the reader accepts any distinct names and maps them to wires by position.
*/

#pragma once

#include "circuit.hpp"
#include "errors.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace rmsynth
{

inline std::vector<std::string> default_wire_names( uint32_t width )
{
  std::vector<std::string> names;
  for ( uint32_t i = 0; i + 1u < width; ++i )
    names.push_back( "x" + std::to_string( i ) );
  if ( width > 0u )
    names.push_back( "f" );
  return names;
}

inline std::string write_netlist( circuit const& c )
{
  auto const names = default_wire_names( c.width() );
  std::ostringstream out;
  out << ".numvars " << c.width() << "\n.variables";
  for ( auto const& n : names )
    out << ' ' << n;
  out << "\n.begin\n";
  for ( auto const& g : c.gates() )
  {
    out << 't' << g.num_controls() + 1u;
    g.controls.for_each( [&]( uint32_t w ) { out << ' ' << names[w]; } );
    out << ' ' << names[g.target] << '\n';
  }
  out << ".end\n";
  return out.str();
}

inline circuit read_netlist( std::string const& text )
{
  std::istringstream in( text );
  std::string raw;
  uint32_t line_no = 0u;

  std::optional<uint32_t> width;
  std::map<std::string, uint32_t> wire_of;
  std::optional<circuit> result;
  enum class section { header, body, done } state = section::header;

  while ( std::getline( in, raw ) )
  {
    ++line_no;
    auto const hash = raw.find( '#' );
    std::istringstream words( hash == std::string::npos ? raw : raw.substr( 0, hash ) );
    std::vector<std::string> tok;
    for ( std::string w; words >> w; )
      tok.push_back( w );
    if ( tok.empty() )
      continue;

    auto const& head = tok.front();
    if ( state == section::done )
      throw parse_error( "content after .end", line_no );

    if ( head == ".numvars" )
    {
      if ( state != section::header || width )
        throw parse_error( "unexpected .numvars", line_no );
      if ( tok.size() != 2u || tok[1].find_first_not_of( "0123456789" ) != std::string::npos || tok[1].size() > 3u )
        throw parse_error( "malformed .numvars", line_no );
      width = static_cast<uint32_t>( std::stoul( tok[1] ) );
      if ( *width == 0u || *width > max_indices )
        throw parse_error( ".numvars must be between 1 and 64", line_no );
    }
    else if ( head == ".variables" )
    {
      if ( state != section::header || !width || !wire_of.empty() )
        throw parse_error( ".variables must follow .numvars exactly once", line_no );
      if ( tok.size() - 1u != *width )
        throw parse_error( ".variables lists " + std::to_string( tok.size() - 1u ) + " names but .numvars is " +
                               std::to_string( *width ),
                           line_no );
      for ( uint32_t i = 1; i < tok.size(); ++i )
      {
        if ( !wire_of.emplace( tok[i], i - 1u ).second )
          throw parse_error( "duplicate wire name '" + tok[i] + "'", line_no );
      }
    }
    else if ( head == ".begin" )
    {
      if ( state != section::header || wire_of.empty() || tok.size() != 1u )
        throw parse_error( "malformed header before .begin", line_no );
      result.emplace( *width );
      state = section::body;
    }
    else if ( head == ".end" )
    {
      if ( state != section::body || tok.size() != 1u )
        throw parse_error( "unexpected .end", line_no );
      state = section::done;
    }
    else if ( head[0] == '.' )
    {
      throw parse_error( "unknown directive '" + head + "'", line_no );
    }
    else
    {
      if ( state != section::body )
        throw parse_error( "gate outside .begin/.end", line_no );
      if ( head.size() < 2u || head[0] != 't' || head.find_first_not_of( "0123456789", 1 ) != std::string::npos ||
           head.size() > 3u )
        throw parse_error( "unknown gate '" + head + "'", line_no );
      auto const k = std::stoul( head.substr( 1 ) );
      if ( k == 0u || tok.size() - 1u != k )
        throw parse_error( "gate " + head + " expects " + std::to_string( k ) + " wires", line_no );

      gate g;
      for ( size_t i = 1; i < tok.size(); ++i )
      {
        auto it = wire_of.find( tok[i] );
        if ( it == wire_of.end() )
          throw parse_error( "unknown wire name '" + tok[i] + "'", line_no );
        if ( i + 1u == tok.size() )
        {
          if ( g.controls.contains( it->second ) )
            throw parse_error( "target '" + tok[i] + "' is listed among the controls", line_no );
          g.target = it->second;
        }
        else
        {
          if ( g.controls.contains( it->second ) )
            throw parse_error( "control '" + tok[i] + "' listed twice", line_no );
          g.controls.insert( it->second );
        }
      }
      result->add_gate( g );
    }
  }

  if ( state != section::done )
    throw parse_error( state == section::header ? "missing .begin" : "missing .end", line_no );
  return *result;
}

} // namespace rmsynth
