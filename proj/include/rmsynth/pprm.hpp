/*!
  \file pprm.hpp
  \brief Positive-polarity Reed-Muller expressions

  A PPRM expression is an XOR of products of uncomplemented variables. It is
  stored as a duplicate-free list of minterms kept in canonical order (by
  degree, then lexicographically by ascending variable indices), so two
  expressions denote the same function iff they compare equal.
*/

#pragma once

#include "errors.hpp"
#include "index_set.hpp"
#include "truth_table.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace rmsynth
{

class pprm_expr
{
public:
  pprm_expr() = default;

  /*! \brief Builds the XOR of `terms`; repeated terms cancel pairwise. */
  pprm_expr( uint32_t num_vars, std::vector<minterm> terms ) : num_vars_( num_vars ), terms_( std::move( terms ) )
  {
    if ( num_vars > max_indices )
    {
      throw std::out_of_range( "expressions are limited to 64 variables" );
    }
    auto const domain = index_set::range( num_vars );
    for ( auto t : terms_ )
    {
      if ( !t.is_subset_of( domain ) )
      {
        throw std::out_of_range( "term uses variable x" + std::to_string( ( t - domain ).front() ) +
                                 " but the expression has " + std::to_string( num_vars ) + " variables" );
      }
    }
    canonicalize();
  }

  uint32_t num_vars() const { return num_vars_; }
  std::vector<minterm> const& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  bool contains( minterm m ) const
  {
    return std::binary_search( terms_.begin(), terms_.end(), m, canonical_order{} );
  }

  /*! \brief Highest term degree, or -1 for the zero expression. */
  int degree() const { return terms_.empty() ? -1 : static_cast<int>( terms_.back().size() ); }

  /*! \brief Same terms over a larger variable count. */
  pprm_expr with_num_vars( uint32_t num_vars ) const { return pprm_expr( num_vars, terms_ ); }

  /*! \brief XOR of two expressions (symmetric difference of term sets). */
  friend pprm_expr operator^( pprm_expr const& a, pprm_expr const& b )
  {
    auto terms = a.terms_;
    terms.insert( terms.end(), b.terms_.begin(), b.terms_.end() );
    return pprm_expr( std::max( a.num_vars_, b.num_vars_ ), std::move( terms ) );
  }

  bool operator==( pprm_expr const& ) const = default;

private:
  void canonicalize()
  {
    std::sort( terms_.begin(), terms_.end(), canonical_order{} );
    std::vector<minterm> kept;
    kept.reserve( terms_.size() );
    for ( auto t : terms_ )
    {
      if ( !kept.empty() && kept.back() == t )
        kept.pop_back();
      else
        kept.push_back( t );
    }
    terms_ = std::move( kept );
  }

  uint32_t num_vars_ = 0u;
  std::vector<minterm> terms_;
};

namespace detail
{

class pprm_lexer
{
public:
  /*! `limit` is the number of declared variables, or 64 when undeclared. */
  pprm_lexer( std::string_view text, uint32_t limit ) : text_( text ), limit_( limit ) {}

  void skip_space()
  {
    while ( pos_ < text_.size() && std::isspace( static_cast<unsigned char>( text_[pos_] ) ) )
      ++pos_;
  }

  bool at_end()
  {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek()
  {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  uint32_t column() const { return static_cast<uint32_t>( pos_ + 1u ); }

  [[noreturn]] void fail( std::string const& what ) const { throw parse_error( what, 0u, column() ); }

  void expect( char c )
  {
    if ( peek() != c )
      fail( std::string( "expected '" ) + c + "'" );
    ++pos_;
  }

  /*! Parses one factor: `1`, `0` or `x<k>`. Returns false for the factor 0. */
  bool factor( minterm& term, uint32_t& max_index )
  {
    auto const c = peek();
    if ( c == '1' || c == '0' )
    {
      ++pos_;
      if ( pos_ < text_.size() && std::isdigit( static_cast<unsigned char>( text_[pos_] ) ) )
        fail( "malformed constant" );
      return c == '1';
    }
    if ( c != 'x' )
    {
      fail( c == '\0' ? "unexpected end of expression" : std::string( "unexpected character '" ) + c + "'" );
    }
    auto const start = column();
    ++pos_;
    if ( pos_ >= text_.size() || !std::isdigit( static_cast<unsigned char>( text_[pos_] ) ) )
      fail( "variable name must be x followed by an index" );
    uint64_t index = 0u;
    while ( pos_ < text_.size() && std::isdigit( static_cast<unsigned char>( text_[pos_] ) ) )
    {
      index = index * 10u + static_cast<uint64_t>( text_[pos_] - '0' );
      if ( index >= max_indices )
        throw parse_error( "variable index exceeds the 64-variable limit", 0u, start );
      ++pos_;
    }
    if ( index >= limit_ )
    {
      throw parse_error( "variable x" + std::to_string( index ) + " out of range for " + std::to_string( limit_ ) +
                             " variables",
                         0u, start );
    }
    term.insert( static_cast<uint32_t>( index ) );
    max_index = std::max( max_index, static_cast<uint32_t>( index ) );
    return true;
  }

private:
  std::string_view text_;
  uint32_t limit_;
  size_t pos_ = 0u;
};

} // namespace detail

/*!
  \brief Parses an XOR-of-products expression such as `1 + x0*x2 + x1`.

  Terms are separated by `+`, factors by `*`; a factor is `1`, `0` or
  `x<k>`. Whitespace is ignored. A variable repeated inside a term collapses
  and duplicate terms cancel. When `num_vars` is negative the variable count
  is one more than the largest index used.
*/
inline pprm_expr parse_pprm( std::string_view text, int num_vars = -1 )
{
  if ( num_vars > static_cast<int>( max_indices ) )
    throw std::out_of_range( "expressions are limited to 64 variables" );
  detail::pprm_lexer lex( text, num_vars >= 0 ? static_cast<uint32_t>( num_vars ) : max_indices );
  if ( lex.at_end() )
  {
    throw parse_error( "empty expression", 0u, 1u );
  }

  std::vector<minterm> terms;
  uint32_t max_index = 0u;
  bool any_var = false;
  for ( ;; )
  {
    minterm term;
    uint32_t term_max = 0u;
    bool nonzero = lex.factor( term, term_max );
    while ( lex.peek() == '*' )
    {
      lex.expect( '*' );
      nonzero = lex.factor( term, term_max ) && nonzero;
    }
    if ( !term.empty() )
    {
      any_var = true;
      max_index = std::max( max_index, term_max );
    }
    if ( nonzero )
      terms.push_back( term );

    if ( lex.at_end() )
      break;
    lex.expect( '+' );
  }

  uint32_t const inferred = any_var ? max_index + 1u : 0u;
  if ( num_vars >= 0 )
  {
    return pprm_expr( static_cast<uint32_t>( num_vars ), std::move( terms ) );
  }
  return pprm_expr( inferred, std::move( terms ) );
}

inline std::string format_minterm( minterm m )
{
  if ( m.empty() )
    return "1";
  std::string s;
  m.for_each( [&]( uint32_t v ) {
    if ( !s.empty() )
      s += '*';
    s += 'x' + std::to_string( v );
  } );
  return s;
}

/*! \brief Canonical text: terms in canonical order joined by ` + `; `0` for the empty expression. */
inline std::string format_pprm( pprm_expr const& e )
{
  if ( e.empty() )
    return "0";
  std::string s;
  for ( auto t : e.terms() )
  {
    if ( !s.empty() )
      s += " + ";
    s += format_minterm( t );
  }
  return s;
}

/*! \brief Value of `e` at the assignment whose bit `k` is `x_k`. */
inline bool evaluate( pprm_expr const& e, uint64_t assignment )
{
  if ( !index_set( assignment ).is_subset_of( index_set::range( e.num_vars() ) ) )
  {
    throw std::invalid_argument( "assignment sets variables beyond the expression's variable count" );
  }
  bool value = false;
  for ( auto t : e.terms() )
  {
    value ^= ( t.bits() & ~assignment ) == 0u;
  }
  return value;
}

inline bool evaluate( pprm_expr const& e, std::vector<bool> const& assignment )
{
  if ( assignment.size() != e.num_vars() )
  {
    throw std::invalid_argument( "assignment has " + std::to_string( assignment.size() ) + " bits, expected " +
                                 std::to_string( e.num_vars() ) );
  }
  uint64_t bits = 0u;
  for ( size_t i = 0; i < assignment.size(); ++i )
  {
    if ( assignment[i] )
      bits |= uint64_t( 1 ) << i;
  }
  return evaluate( e, bits );
}

inline truth_table pprm_to_truth_table( pprm_expr const& e )
{
  truth_table t( e.num_vars() );
  for ( auto m : e.terms() )
  {
    t.set( m.bits(), true );
  }
  moebius_transform_inplace( t );
  return t;
}

inline pprm_expr truth_table_to_pprm( truth_table const& t )
{
  auto coeffs = moebius_transform( t );
  std::vector<minterm> terms;
  auto const& words = coeffs.words();
  for ( size_t w = 0; w < words.size(); ++w )
  {
    for ( auto bits = words[w]; bits != 0u; bits &= bits - 1u )
    {
      terms.emplace_back( ( uint64_t( w ) << 6 ) + static_cast<uint64_t>( std::countr_zero( bits ) ) );
    }
  }
  return pprm_expr( t.num_vars(), std::move( terms ) );
}

/*! \brief Splits `e` into one homogeneous expression per occurring degree. */
inline std::map<uint32_t, pprm_expr> degree_partition( pprm_expr const& e )
{
  std::map<uint32_t, std::vector<minterm>> buckets;
  for ( auto t : e.terms() )
  {
    buckets[t.size()].push_back( t );
  }
  std::map<uint32_t, pprm_expr> out;
  for ( auto& [d, terms] : buckets )
  {
    out.emplace( d, pprm_expr( e.num_vars(), std::move( terms ) ) );
  }
  return out;
}

inline bool is_homogeneous( pprm_expr const& e, uint32_t k )
{
  return std::all_of( e.terms().begin(), e.terms().end(), [k]( minterm t ) { return t.size() == k; } );
}

/*! \brief Names accepted by `builtin`. */
inline std::vector<std::string> builtin_names()
{
  return { "4mod5", "2of5", "hbfr6" };
}

/*!
  \brief Built-in benchmark functions.

  - `hbfr6`: homogeneous bent function of degree 3 on six variables (16 terms)
  - `4mod5`: 1 + x0 + x1 + x2 + x3 + x0x1 + x1x2 + x0x3 + x2x3
  - `2of5`: 1 iff exactly two of five inputs are 1
*/
inline pprm_expr builtin( std::string_view name )
{
  if ( name == "hbfr6" )
  {
    return parse_pprm( "x0*x1*x2 + x0*x1*x3 + x0*x1*x4 + x0*x1*x5 + x0*x2*x3 + x0*x2*x5 + x0*x3*x4 + x0*x4*x5 + "
                       "x1*x2*x3 + x1*x2*x4 + x1*x3*x5 + x1*x4*x5 + x2*x3*x4 + x2*x3*x5 + x2*x4*x5 + x3*x4*x5",
                       6 );
  }
  if ( name == "4mod5" )
  {
    return parse_pprm( "1 + x0 + x1 + x2 + x3 + x0*x1 + x1*x2 + x0*x3 + x2*x3", 4 );
  }
  if ( name == "2of5" )
  {
    truth_table t( 5u );
    for ( uint64_t x = 0; x < t.num_bits(); ++x )
    {
      t.set( x, std::popcount( x ) == 2 );
    }
    return truth_table_to_pprm( t );
  }
  throw std::invalid_argument( "unknown builtin benchmark '" + std::string( name ) + "'" );
}

} // namespace rmsynth
