/*!
  \file index_set.hpp
  \brief Small set of indices below 64, stored as a bit mask

  Used for the variables of a product term and for the control wires of a
  gate.
*/

#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace rmsynth
{

/*! \brief Largest number of indices an `index_set` can hold. */
inline constexpr uint32_t max_indices = 64u;

class index_set
{
public:
  constexpr index_set() = default;
  constexpr explicit index_set( uint64_t bits ) : bits_( bits ) {}

  index_set( std::initializer_list<uint32_t> indices )
  {
    for ( auto i : indices )
    {
      insert( i );
    }
  }

  static index_set from_indices( std::vector<uint32_t> const& indices )
  {
    index_set s;
    for ( auto i : indices )
    {
      s.insert( i );
    }
    return s;
  }

  /*! \brief The set {0, ..., n-1}. */
  static constexpr index_set range( uint32_t n )
  {
    return index_set( n >= 64u ? ~uint64_t( 0 ) : ( ( uint64_t( 1 ) << n ) - 1u ) );
  }

  constexpr uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0u; }
  constexpr uint32_t size() const { return static_cast<uint32_t>( std::popcount( bits_ ) ); }

  constexpr bool contains( uint32_t i ) const { return i < 64u && ( ( bits_ >> i ) & 1u ); }

  void insert( uint32_t i )
  {
    if ( i >= max_indices )
    {
      throw std::out_of_range( "index " + std::to_string( i ) + " exceeds the 64-index limit" );
    }
    bits_ |= uint64_t( 1 ) << i;
  }

  constexpr void erase( uint32_t i )
  {
    if ( i < 64u )
    {
      bits_ &= ~( uint64_t( 1 ) << i );
    }
  }

  /*! \brief Smallest element; undefined on the empty set. */
  constexpr uint32_t front() const { return static_cast<uint32_t>( std::countr_zero( bits_ ) ); }
  /*! \brief Largest element; undefined on the empty set. */
  constexpr uint32_t back() const { return 63u - static_cast<uint32_t>( std::countl_zero( bits_ ) ); }

  constexpr bool is_subset_of( index_set other ) const { return ( bits_ & ~other.bits_ ) == 0u; }
  constexpr bool is_strict_subset_of( index_set other ) const { return is_subset_of( other ) && bits_ != other.bits_; }
  constexpr bool intersects( index_set other ) const { return ( bits_ & other.bits_ ) != 0u; }

  constexpr index_set operator|( index_set o ) const { return index_set( bits_ | o.bits_ ); }
  constexpr index_set operator&( index_set o ) const { return index_set( bits_ & o.bits_ ); }
  constexpr index_set operator^( index_set o ) const { return index_set( bits_ ^ o.bits_ ); }
  constexpr index_set operator-( index_set o ) const { return index_set( bits_ & ~o.bits_ ); }
  constexpr index_set& operator|=( index_set o ) { bits_ |= o.bits_; return *this; }
  constexpr index_set& operator&=( index_set o ) { bits_ &= o.bits_; return *this; }
  constexpr index_set& operator^=( index_set o ) { bits_ ^= o.bits_; return *this; }

  constexpr bool operator==( index_set const& ) const = default;

  std::vector<uint32_t> indices() const
  {
    std::vector<uint32_t> out;
    out.reserve( size() );
    for_each( [&]( uint32_t i ) { out.push_back( i ); } );
    return out;
  }

  /*! \brief Calls `fn` on each element in ascending order. */
  template<class Fn>
  void for_each( Fn&& fn ) const
  {
    for ( auto b = bits_; b != 0u; b &= b - 1u )
    {
      fn( static_cast<uint32_t>( std::countr_zero( b ) ) );
    }
  }

private:
  uint64_t bits_ = 0u;
};

/*!
  \brief Canonical term order: by size, then lexicographically on the
  ascending element lists.

  For equal sizes the set holding the smallest element of the symmetric
  difference comes first.
*/
inline bool canonical_less( index_set a, index_set b )
{
  if ( a.size() != b.size() )
  {
    return a.size() < b.size();
  }
  if ( a == b )
  {
    return false;
  }
  return a.contains( ( a ^ b ).front() );
}

struct canonical_order
{
  bool operator()( index_set a, index_set b ) const { return canonical_less( a, b ); }
};

/*! A product term; the empty set is the constant 1. */
using minterm = index_set;

} // namespace rmsynth
