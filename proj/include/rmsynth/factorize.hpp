/*!
  \file factorize.hpp
  \brief Factorization of PPRM expressions into shared XOR groups

  The factorizer works per degree bucket. Within a bucket it repeatedly
  pulls out the variable occurring in the most remaining terms (the factor
  variable; ties go to the lowest index) together with the terms containing
  it (its factor group), until no variable occurs more than once. Sub-terms
  that appear in the factor groups of several factor variables are then
  collected by their owner set O, giving products (x_o1 + x_o2 + ...) * q.
  Every term set is factorized again recursively, and owner sets related by
  strict inclusion are arranged into chains, each of which can reuse one
  accumulator wire while its XOR group grows.

  For example `x0*x3*x4 + x1*x3*x4 + x2*x3*x4` becomes
  `x3*x4*(x0 + x1 + x2)`.
*/

#pragma once

#include "index_set.hpp"
#include "pprm.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace rmsynth
{

/*! \brief Occurrence table of a homogeneous bucket: one row per term, one column per variable. */
struct factor_table
{
  uint32_t num_vars = 0u;
  std::vector<minterm> rows;
  std::vector<uint32_t> column_counts;

  bool cell( size_t row, uint32_t var ) const { return rows.at( row ).contains( var ); }
  size_t num_rows() const { return rows.size(); }
};

inline factor_table build_factor_table( pprm_expr const& bucket )
{
  if ( bucket.empty() )
    throw std::invalid_argument( "factor table needs at least one term" );
  auto const d = bucket.terms().front().size();
  if ( d < 2u || !is_homogeneous( bucket, d ) )
    throw std::invalid_argument( "factor table needs a homogeneous bucket of degree 2 or more" );

  factor_table t;
  t.num_vars = bucket.num_vars();
  t.rows = bucket.terms();
  t.column_counts.assign( t.num_vars, 0u );
  for ( auto r : t.rows )
    r.for_each( [&]( uint32_t v ) { ++t.column_counts[v]; } );
  return t;
}

struct factor_link;

/*! \brief Links whose XOR groups are strictly nested, smallest first. */
struct factor_chain
{
  std::vector<factor_link> links;
};

/*!
  \brief Factored expression.

  Denotes `constant + sum(linear) + sum(chains) + sum(remainder)` over
  GF(2), where a chain denotes the sum of its links.
*/
struct factored_form
{
  bool constant = false;
  index_set linear;
  std::vector<factor_chain> chains;
  std::vector<minterm> remainder;

  bool empty() const { return !constant && linear.empty() && chains.empty() && remainder.empty(); }
};

/*! \brief `coefficient * (x_g1 + x_g2 + ...)` over the variables of `group`. */
struct factor_link
{
  index_set group;
  factored_form coefficient;
};

namespace detail
{

inline void xor_insert( std::vector<minterm>& terms, minterm t )
{
  auto it = std::find( terms.begin(), terms.end(), t );
  if ( it != terms.end() )
    terms.erase( it );
  else
    terms.push_back( t );
}

inline void merge_into( factored_form& into, factored_form const& from )
{
  into.constant ^= from.constant;
  into.linear ^= from.linear;
  into.chains.insert( into.chains.end(), from.chains.begin(), from.chains.end() );
  for ( auto t : from.remainder )
    xor_insert( into.remainder, t );
}

/*! Product of `f` with the variable `v`, which does not occur in `f`. */
inline factored_form multiply( factored_form const& f, uint32_t v )
{
  factored_form out;
  index_set const var{ v };
  if ( f.constant )
    out.remainder.push_back( var );
  if ( f.linear.size() == 1u )
    out.remainder.push_back( f.linear | var );
  else if ( f.linear.size() >= 2u )
  {
    factored_form coeff;
    coeff.remainder.push_back( var );
    out.chains.push_back( factor_chain{ { factor_link{ f.linear, coeff } } } );
  }
  for ( auto const& c : f.chains )
  {
    factor_chain lifted;
    for ( auto const& l : c.links )
      lifted.links.push_back( factor_link{ l.group, multiply( l.coefficient, v ) } );
    out.chains.push_back( std::move( lifted ) );
  }
  for ( auto t : f.remainder )
    out.remainder.push_back( t | var );
  return out;
}

/*!
  Arranges links into chains of strictly nested groups. Links with equal
  groups are merged first. Each link, taken in canonical group order, joins
  the chain whose last group is the largest strict subset of it (earliest
  chain on ties), or starts a new chain. Chains are returned ordered by their
  largest group.
*/
inline std::vector<factor_chain> build_chains( std::vector<factor_link> links )
{
  std::map<index_set, factored_form, canonical_order> by_group;
  for ( auto& l : links )
  {
    auto [it, fresh] = by_group.try_emplace( l.group, l.coefficient );
    if ( !fresh )
      merge_into( it->second, l.coefficient );
  }

  std::vector<factor_chain> chains;
  for ( auto& [group, coeff] : by_group )
  {
    factor_chain* host = nullptr;
    for ( auto& c : chains )
    {
      auto const last = c.links.back().group;
      if ( last.is_strict_subset_of( group ) && ( !host || last.size() > host->links.back().group.size() ) )
        host = &c;
    }
    if ( host )
      host->links.push_back( factor_link{ group, std::move( coeff ) } );
    else
      chains.push_back( factor_chain{ { factor_link{ group, std::move( coeff ) } } } );
  }

  std::stable_sort( chains.begin(), chains.end(), []( factor_chain const& a, factor_chain const& b ) {
    return canonical_less( a.links.back().group, b.links.back().group );
  } );
  return chains;
}

inline factored_form factorize_terms( std::vector<minterm> const& terms );

/*! One homogeneous bucket of degree >= 2. */
inline factored_form factorize_bucket( std::vector<minterm> const& rows )
{
  struct factor
  {
    uint32_t var;
    std::vector<minterm> group;
  };

  std::vector<minterm> remaining = rows;
  std::vector<factor> factors;
  for ( ;; )
  {
    std::vector<uint32_t> counts( max_indices, 0u );
    for ( auto r : remaining )
      r.for_each( [&]( uint32_t v ) { ++counts[v]; } );
    auto const best = static_cast<uint32_t>( std::max_element( counts.begin(), counts.end() ) - counts.begin() );
    if ( counts[best] <= 1u )
      break;

    factor f{ best, {} };
    std::vector<minterm> rest;
    for ( auto r : remaining )
    {
      if ( r.contains( best ) )
        f.group.push_back( r - index_set{ best } );
      else
        rest.push_back( r );
    }
    factors.push_back( std::move( f ) );
    remaining = std::move( rest );
  }

  factored_form out;
  out.remainder = remaining;

  std::map<minterm, index_set, canonical_order> owners;
  for ( auto const& f : factors )
    for ( auto t : f.group )
      owners[t].insert( f.var );

  std::map<index_set, std::vector<minterm>, canonical_order> shared;
  for ( auto const& [t, owner_set] : owners )
  {
    if ( owner_set.size() >= 2u )
      shared[owner_set].push_back( t );
  }

  std::vector<factor_link> links;
  for ( auto const& [owner_set, sub_terms] : shared )
    links.push_back( factor_link{ owner_set, factorize_terms( sub_terms ) } );

  for ( auto const& f : factors )
  {
    std::vector<minterm> leftover;
    for ( auto t : f.group )
    {
      if ( owners[t].size() == 1u )
        leftover.push_back( t );
    }
    if ( leftover.empty() )
      continue;
    auto lifted = multiply( factorize_terms( leftover ), f.var );
    for ( auto& c : lifted.chains )
      for ( auto& l : c.links )
        links.push_back( std::move( l ) );
    for ( auto t : lifted.remainder )
      xor_insert( out.remainder, t );
  }

  out.chains = build_chains( std::move( links ) );
  std::sort( out.remainder.begin(), out.remainder.end(), canonical_order{} );
  return out;
}

/*! Degree 0 and 1 terms go to the constant and linear parts, degree 2 and 3 buckets are factorized, higher degrees stay in the remainder. */
inline factored_form factorize_terms( std::vector<minterm> const& terms )
{
  factored_form out;
  std::map<uint32_t, std::vector<minterm>> buckets;
  for ( auto t : terms )
  {
    if ( t.empty() )
      out.constant ^= true;
    else if ( t.size() == 1u )
      out.linear ^= t;
    else
      buckets[t.size()].push_back( t );
  }
  for ( auto const& [d, rows] : buckets )
  {
    if ( d > 3u )
    {
      for ( auto t : rows )
        xor_insert( out.remainder, t );
      continue;
    }
    auto part = factorize_bucket( rows );
    out.chains.insert( out.chains.end(), part.chains.begin(), part.chains.end() );
    for ( auto t : part.remainder )
      xor_insert( out.remainder, t );
  }
  std::sort( out.remainder.begin(), out.remainder.end(), canonical_order{} );
  return out;
}

inline void expand_into( factored_form const& f, std::vector<minterm>& out )
{
  if ( f.constant )
    out.push_back( minterm{} );
  f.linear.for_each( [&]( uint32_t v ) { out.push_back( index_set{ v } ); } );
  for ( auto const& c : f.chains )
  {
    for ( auto const& l : c.links )
    {
      std::vector<minterm> coeff;
      expand_into( l.coefficient, coeff );
      for ( auto t : coeff )
        l.group.for_each( [&]( uint32_t g ) { out.push_back( t | index_set{ g } ); } );
    }
  }
  out.insert( out.end(), f.remainder.begin(), f.remainder.end() );
}

} // namespace detail

/*! \brief Factorizes `e` deterministically. */
inline factored_form factorize( pprm_expr const& e )
{
  return detail::factorize_terms( e.terms() );
}

/*! \brief Multiplies out `f` over `num_vars` variables, cancelling repeated terms. */
inline pprm_expr expand( factored_form const& f, uint32_t num_vars )
{
  std::vector<minterm> terms;
  detail::expand_into( f, terms );
  return pprm_expr( num_vars, std::move( terms ) );
}

/*! \brief True iff every chain holds at least one link and its groups are strictly nested. */
inline bool is_well_formed( factored_form const& f )
{
  for ( auto const& c : f.chains )
  {
    if ( c.links.empty() )
      return false;
    for ( size_t i = 0; i < c.links.size(); ++i )
    {
      if ( c.links[i].group.size() < 2u || !is_well_formed( c.links[i].coefficient ) )
        return false;
      if ( i > 0u && !c.links[i - 1u].group.is_strict_subset_of( c.links[i].group ) )
        return false;
    }
  }
  return true;
}

namespace detail
{

inline std::string format_group( index_set g )
{
  std::string s = "(";
  g.for_each( [&]( uint32_t v ) {
    if ( s.size() > 1u )
      s += " + ";
    s += "x" + std::to_string( v );
  } );
  return s + ")";
}

inline std::vector<std::string> format_summands( factored_form const& f )
{
  std::vector<std::string> parts;
  if ( f.constant )
    parts.push_back( "1" );
  f.linear.for_each( [&]( uint32_t v ) { parts.push_back( "x" + std::to_string( v ) ); } );
  for ( auto const& c : f.chains )
  {
    for ( auto const& l : c.links )
    {
      auto inner = format_summands( l.coefficient );
      std::string coeff;
      if ( inner.size() == 1u )
        coeff = inner.front() == "1" ? std::string{} : inner.front() + "*";
      else
      {
        coeff = "(";
        for ( size_t i = 0; i < inner.size(); ++i )
          coeff += ( i ? " + " : "" ) + inner[i];
        coeff += ")*";
      }
      parts.push_back( coeff + format_group( l.group ) );
    }
  }
  for ( auto t : f.remainder )
    parts.push_back( format_minterm( t ) );
  return parts;
}

} // namespace detail

/*! \brief Human-readable form, e.g. `x3*x4*(x0 + x1 + x2)`. Chains are listed link by link. */
inline std::string to_string( factored_form const& f )
{
  auto parts = detail::format_summands( f );
  if ( parts.empty() )
    return "0";
  std::string s;
  for ( size_t i = 0; i < parts.size(); ++i )
    s += ( i ? " + " : "" ) + parts[i];
  return s;
}

} // namespace rmsynth
