/*!
  \file circuit.hpp
  \brief Multi-control-NOT circuits over n inputs plus one result wire

  Wire `n` of a circuit of width `n + 1` is the ancilla, initialized to 0,
  which accumulates the function value.
*/

#pragma once

#include "errors.hpp"
#include "index_set.hpp"
#include "truth_table.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rmsynth
{

/*! \brief Default limit on the number of inputs enumerated exhaustively. */
inline constexpr uint32_t default_guard = 20u;

/*! \brief Flips `target` iff every wire in `controls` is 1. */
struct gate
{
  index_set controls;
  uint32_t target = 0u;

  uint32_t num_controls() const { return controls.size(); }
  index_set wires() const { return controls | index_set{ target }; }

  bool operator==( gate const& ) const = default;
};

class circuit
{
public:
  circuit() = default;

  explicit circuit( uint32_t width ) : width_( width )
  {
    if ( width > max_indices )
      throw std::out_of_range( "circuits are limited to 64 wires" );
  }

  uint32_t width() const { return width_; }
  uint32_t num_inputs() const { return width_ == 0u ? 0u : width_ - 1u; }
  uint32_t ancilla() const { return num_inputs(); }

  std::vector<gate> const& gates() const { return gates_; }
  size_t num_gates() const { return gates_.size(); }

  void add_gate( gate const& g )
  {
    if ( g.target >= width_ || !g.controls.is_subset_of( index_set::range( width_ ) ) )
      throw std::out_of_range( "gate refers to a wire outside the circuit" );
    if ( g.controls.contains( g.target ) )
      throw std::invalid_argument( "gate target is also one of its controls" );
    gates_.push_back( g );
  }

  void add_gate( index_set controls, uint32_t target ) { add_gate( gate{ controls, target } ); }

  /*! \brief Appends the gates of `other`, which must have the same width. */
  void append( circuit const& other )
  {
    if ( other.width_ != width_ )
      throw std::invalid_argument( "cannot append circuits of different widths" );
    gates_.insert( gates_.end(), other.gates_.begin(), other.gates_.end() );
  }

  /*! \brief Copy holding only the first `count` gates. */
  circuit prefix( size_t count ) const
  {
    circuit c( width_ );
    c.gates_.assign( gates_.begin(), gates_.begin() + static_cast<std::ptrdiff_t>( std::min( count, gates_.size() ) ) );
    return c;
  }

  bool operator==( circuit const& ) const = default;

private:
  uint32_t width_ = 0u;
  std::vector<gate> gates_;
};

inline size_t gate_count( circuit const& c )
{
  return c.num_gates();
}

/*! \brief Runs `c` on one state; bit `w` of `state` is the value of wire `w`. */
inline uint64_t simulate( circuit const& c, uint64_t state )
{
  if ( !index_set( state ).is_subset_of( index_set::range( c.width() ) ) )
    throw std::invalid_argument( "state sets bits beyond the circuit width" );
  for ( auto const& g : c.gates() )
  {
    if ( ( state & g.controls.bits() ) == g.controls.bits() )
      state ^= uint64_t( 1 ) << g.target;
  }
  return state;
}

inline std::vector<bool> simulate( circuit const& c, std::vector<bool> const& state )
{
  if ( state.size() != c.width() )
  {
    throw std::invalid_argument( "state has " + std::to_string( state.size() ) + " bits, circuit width is " +
                                 std::to_string( c.width() ) );
  }
  uint64_t bits = 0u;
  for ( size_t i = 0; i < state.size(); ++i )
  {
    if ( state[i] )
      bits |= uint64_t( 1 ) << i;
  }
  bits = simulate( c, bits );
  std::vector<bool> out( state.size() );
  for ( size_t i = 0; i < out.size(); ++i )
    out[i] = ( bits >> i ) & 1u;
  return out;
}

/*!
  \brief Simulates all 2^n input assignments at once.

  Returns one table per wire; input wire `i` starts as the projection onto
  `x_i` and the ancilla starts as the constant `ancilla_init`.
*/
inline std::vector<truth_table> simulate_all( circuit const& c, bool ancilla_init = false,
                                              uint32_t guard = default_guard )
{
  auto const n = c.num_inputs();
  if ( n > guard )
    throw guard_exceeded( n, guard );
  std::vector<truth_table> wires;
  wires.reserve( c.width() );
  for ( uint32_t i = 0; i < n; ++i )
    wires.push_back( truth_table::nth_var( n, i ) );
  wires.push_back( truth_table::constant( n, ancilla_init ) );

  auto const ones = truth_table::constant( n, true );
  for ( auto const& g : c.gates() )
  {
    auto active = ones;
    g.controls.for_each( [&]( uint32_t w ) { active &= wires[w]; } );
    wires[g.target] ^= active;
  }
  return wires;
}

/*! \brief Final ancilla value for every input assignment (ancilla starting at 0). */
inline truth_table circuit_function( circuit const& c, uint32_t guard = default_guard )
{
  if ( c.width() == 0u )
    throw std::invalid_argument( "circuit has no ancilla wire" );
  return simulate_all( c, false, guard ).back();
}

/*! \brief True iff every input wire returns to its initial value for every assignment. */
inline bool preserves_inputs( circuit const& c, uint32_t guard = default_guard )
{
  if ( c.width() == 0u )
    return true;
  auto const wires = simulate_all( c, false, guard );
  auto const n = c.num_inputs();
  for ( uint32_t i = 0; i < n; ++i )
  {
    if ( !( wires[i] == truth_table::nth_var( n, i ) ) )
      return false;
  }
  return true;
}

/*! \brief Reversed gate list; every gate is self-inverse. */
inline circuit inverse( circuit const& c )
{
  circuit r( c.width() );
  for ( auto it = c.gates().rbegin(); it != c.gates().rend(); ++it )
    r.add_gate( *it );
  return r;
}

} // namespace rmsynth
