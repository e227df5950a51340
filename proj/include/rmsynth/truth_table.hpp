/*!
  \file truth_table.hpp
  \brief Dense single-output truth tables and the GF(2) Moebius transform

  Bit `x` of a table over `n` variables holds f(x) where bit `k` of the
  integer `x` is the value of variable `x_k`.
*/

#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rmsynth
{

/*! \brief Tables beyond this many variables are refused outright (2^30 bits = 128 MiB). */
inline constexpr uint32_t max_table_vars = 30u;

class truth_table
{
public:
  truth_table() : truth_table( 0u ) {}

  explicit truth_table( uint32_t num_vars ) : num_vars_( num_vars )
  {
    if ( num_vars > max_table_vars )
    {
      throw std::length_error( "truth table over " + std::to_string( num_vars ) + " variables exceeds the limit of " +
                               std::to_string( max_table_vars ) );
    }
    words_.assign( num_vars <= 6u ? 1u : ( size_t( 1 ) << ( num_vars - 6u ) ), 0u );
  }

  /*! \brief Projection onto variable `var`. */
  static truth_table nth_var( uint32_t num_vars, uint32_t var )
  {
    static constexpr std::array<uint64_t, 6> projections = {
        0xaaaaaaaaaaaaaaaaull, 0xccccccccccccccccull, 0xf0f0f0f0f0f0f0f0ull,
        0xff00ff00ff00ff00ull, 0xffff0000ffff0000ull, 0xffffffff00000000ull };
    truth_table t( num_vars );
    if ( var < 6u )
    {
      for ( auto& w : t.words_ )
      {
        w = projections[var];
      }
    }
    else
    {
      size_t const stride = size_t( 1 ) << ( var - 6u );
      for ( size_t i = 0; i < t.words_.size(); ++i )
      {
        t.words_[i] = ( i & stride ) ? ~uint64_t( 0 ) : 0u;
      }
    }
    t.mask_tail();
    return t;
  }

  static truth_table constant( uint32_t num_vars, bool value )
  {
    truth_table t( num_vars );
    if ( value )
    {
      for ( auto& w : t.words_ )
      {
        w = ~uint64_t( 0 );
      }
      t.mask_tail();
    }
    return t;
  }

  uint32_t num_vars() const { return num_vars_; }
  uint64_t num_bits() const { return uint64_t( 1 ) << num_vars_; }

  bool get( uint64_t index ) const { return ( words_[index >> 6] >> ( index & 63u ) ) & 1u; }

  void set( uint64_t index, bool value )
  {
    auto const mask = uint64_t( 1 ) << ( index & 63u );
    if ( value )
      words_[index >> 6] |= mask;
    else
      words_[index >> 6] &= ~mask;
  }

  std::vector<uint64_t> const& words() const { return words_; }

  bool is_zero() const
  {
    for ( auto w : words_ )
    {
      if ( w != 0u )
        return false;
    }
    return true;
  }

  truth_table& operator^=( truth_table const& other )
  {
    check_compatible( other );
    for ( size_t i = 0; i < words_.size(); ++i )
      words_[i] ^= other.words_[i];
    return *this;
  }

  truth_table& operator&=( truth_table const& other )
  {
    check_compatible( other );
    for ( size_t i = 0; i < words_.size(); ++i )
      words_[i] &= other.words_[i];
    return *this;
  }

  friend truth_table operator^( truth_table a, truth_table const& b ) { return a ^= b; }
  friend truth_table operator&( truth_table a, truth_table const& b ) { return a &= b; }

  bool operator==( truth_table const& ) const = default;

  /*! \brief Least index where the two tables differ, or `num_bits()` if equal. */
  uint64_t first_difference( truth_table const& other ) const
  {
    check_compatible( other );
    for ( size_t i = 0; i < words_.size(); ++i )
    {
      if ( auto d = words_[i] ^ other.words_[i]; d != 0u )
      {
        return ( uint64_t( i ) << 6 ) + static_cast<uint64_t>( std::countr_zero( d ) );
      }
    }
    return num_bits();
  }

  /*! \brief Characters '0'/'1', index 0 first. */
  std::string to_bit_string() const
  {
    std::string s( num_bits(), '0' );
    for ( uint64_t i = 0; i < num_bits(); ++i )
    {
      if ( get( i ) )
        s[i] = '1';
    }
    return s;
  }

  static truth_table from_bit_string( uint32_t num_vars, std::string const& bits )
  {
    truth_table t( num_vars );
    if ( bits.size() != t.num_bits() )
    {
      throw std::invalid_argument( "expected " + std::to_string( t.num_bits() ) + " table bits, got " +
                                   std::to_string( bits.size() ) );
    }
    for ( uint64_t i = 0; i < bits.size(); ++i )
    {
      if ( bits[i] == '1' )
        t.set( i, true );
      else if ( bits[i] != '0' )
        throw std::invalid_argument( "table bit " + std::to_string( i ) + " is neither 0 nor 1" );
    }
    return t;
  }

private:
  void mask_tail()
  {
    if ( num_vars_ < 6u )
    {
      words_[0] &= ( uint64_t( 1 ) << ( uint64_t( 1 ) << num_vars_ ) ) - 1u;
    }
  }

  void check_compatible( truth_table const& other ) const
  {
    if ( num_vars_ != other.num_vars_ )
    {
      throw std::invalid_argument( "truth tables have different variable counts" );
    }
  }

  friend void moebius_transform_inplace( truth_table& t );

  uint32_t num_vars_;
  std::vector<uint64_t> words_;
};

/*!
  \brief In-place Reed-Muller (Moebius) transform over GF(2).

  Maps a truth table to its PPRM coefficient vector and back; the map is an
  involution. Runs in O(n 2^n / 64) word operations.
*/
inline void moebius_transform_inplace( truth_table& t )
{
  static constexpr std::array<uint64_t, 6> low_half = {
      0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
      0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull };

  auto const n = t.num_vars_;
  for ( uint32_t i = 0; i < n && i < 6u; ++i )
  {
    for ( auto& w : t.words_ )
    {
      w ^= ( w & low_half[i] ) << ( 1u << i );
    }
  }
  for ( uint32_t i = 6; i < n; ++i )
  {
    size_t const stride = size_t( 1 ) << ( i - 6u );
    for ( size_t base = 0; base < t.words_.size(); base += 2 * stride )
    {
      for ( size_t j = base; j < base + stride; ++j )
      {
        t.words_[j + stride] ^= t.words_[j];
      }
    }
  }
}

inline truth_table moebius_transform( truth_table t )
{
  moebius_transform_inplace( t );
  return t;
}

} // namespace rmsynth
