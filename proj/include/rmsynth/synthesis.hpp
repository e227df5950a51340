/*!
  \file synthesis.hpp
  \brief Compiling PPRM expressions into multi-control-NOT circuits

  Two methods are provided. The direct method fires one gate per term with
  the term's variables as controls and the ancilla as target. The factor
  method first runs `factorize` and then emits each XOR group once onto an
  accumulator wire, so that every product of the group needs a single gate.

  Emission of a factored form:

  1. the constant term becomes a NOT on the ancilla;
  2. remainder terms become direct gates;
  3. each chain reuses one accumulator wire, the highest-index variable of
     its smallest group; the other group variables are XORed into it with
     Feynman gates, one gate fires per product of the link's coefficient,
     and the accumulator is extended with the variables of the next group.
     A nested XOR factor inside a coefficient is formed on its own
     highest-index wire the same way;
  4. the linear terms reuse wires that still hold an XOR of linear
     variables (largest first, lowest wire on ties): those blocks are merged
     into the highest such wire and fed to the ancilla by one Feynman gate;
     the other linear variables get one Feynman gate each.

  Modified input wires are restored lazily: only when a later gate needs the
  original value of a wire are the modifications it depends on undone. With
  `restore` set, every remaining modification is undone at the end in
  reverse order, so the circuit leaves its inputs unchanged.
*/

#pragma once

#include "circuit.hpp"
#include "cost.hpp"
#include "factorize.hpp"
#include "pprm.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rmsynth
{

inline circuit direct_synthesize( pprm_expr const& e )
{
  circuit c( e.num_vars() + 1u );
  for ( auto t : e.terms() )
    c.add_gate( t, e.num_vars() );
  return c;
}

namespace detail
{

class form_emitter
{
public:
  explicit form_emitter( uint32_t num_vars ) : n_( num_vars ), circ_( num_vars + 1u )
  {
    for ( uint32_t w = 0; w < n_; ++w )
      content_.push_back( index_set{ w } );
  }

  circuit run( factored_form const& f, bool restore )
  {
    if ( f.constant )
      circ_.add_gate( index_set{}, n_ );
    for ( auto t : f.remainder )
      fire( t, {} );
    for ( auto const& c : f.chains )
      emit_chain( c, index_set{}, {} );
    emit_linear( f.linear );
    if ( restore )
      undo_all();
    return std::move( circ_ );
  }

private:
  /*! Requirement that wire `wire` holds the XOR of `group`. */
  struct xor_slot
  {
    index_set group;
    uint32_t wire;
  };

  /*! Input-wire modification `target ^= control`; `delta` is the content the control had. */
  struct modification
  {
    uint32_t control;
    uint32_t target;
    index_set delta;
  };

  bool clean( uint32_t w ) const { return content_[w] == index_set{ w }; }

  void apply( uint32_t control, uint32_t target )
  {
    circ_.add_gate( index_set{ control }, target );
    log_.push_back( { control, target, content_[control] } );
    content_[target] ^= content_[control];
  }

  /*!
    Undoes every logged modification of the wires in `wires`, together with
    the later modifications that must be undone first: those that changed
    the control of an undone entry, or read the target of an undone entry.
  */
  void undo( index_set wires )
  {
    std::vector<bool> marked( log_.size(), false );
    for ( size_t i = 0; i < log_.size(); ++i )
      marked[i] = wires.contains( log_[i].target );

    for ( bool changed = true; changed; )
    {
      changed = false;
      for ( size_t i = 0; i < log_.size(); ++i )
      {
        if ( !marked[i] )
          continue;
        for ( size_t j = i + 1u; j < log_.size(); ++j )
        {
          if ( !marked[j] && ( log_[j].target == log_[i].control || log_[j].control == log_[i].target ) )
            marked[j] = changed = true;
        }
      }
    }

    for ( size_t i = log_.size(); i-- > 0u; )
    {
      if ( !marked[i] )
        continue;
      auto const& m = log_[i];
      if ( content_[m.control] != m.delta )
        throw std::logic_error( "restore order violated" );
      circ_.add_gate( index_set{ m.control }, m.target );
      content_[m.target] ^= m.delta;
    }

    std::vector<modification> kept;
    for ( size_t i = 0; i < log_.size(); ++i )
    {
      if ( !marked[i] )
        kept.push_back( log_[i] );
    }
    log_ = std::move( kept );
  }

  void undo_all() { undo( index_set::range( n_ ) ); }

  /*! One step towards `slot.wire` holding `slot.group`; returns true once it does. */
  bool prepare( xor_slot const& slot )
  {
    auto const have = content_[slot.wire];
    if ( have == slot.group )
      return true;
    if ( !( have - slot.group ).empty() )
    {
      undo( index_set{ slot.wire } );
      return false;
    }
    auto const missing = slot.group - have;
    index_set dirty;
    missing.for_each( [&]( uint32_t u ) {
      if ( !clean( u ) )
        dirty.insert( u );
    } );
    if ( !dirty.empty() )
    {
      undo( dirty );
      return false;
    }
    missing.for_each( [&]( uint32_t u ) { apply( u, slot.wire ); } );
    return true;
  }

  /*! Fires the ancilla gate for the product of `vars` and the XOR slots. */
  void fire( index_set vars, std::vector<xor_slot> const& slots )
  {
    for ( uint32_t attempt = 0;; ++attempt )
    {
      if ( attempt > 4u * ( n_ + 1u ) )
      {
        undo_all();
      }
      index_set dirty;
      vars.for_each( [&]( uint32_t v ) {
        if ( !clean( v ) )
          dirty.insert( v );
      } );
      if ( !dirty.empty() )
      {
        undo( dirty );
        continue;
      }
      bool ready = true;
      for ( auto const& s : slots )
        ready = prepare( s ) && ready;
      if ( !ready )
        continue;

      bool settled = true;
      vars.for_each( [&]( uint32_t v ) { settled = settled && clean( v ); } );
      for ( auto const& s : slots )
        settled = settled && content_[s.wire] == s.group;
      if ( settled )
        break;
    }

    index_set controls = vars;
    for ( auto const& s : slots )
      controls.insert( s.wire );
    circ_.add_gate( controls, n_ );
  }

  void emit_form( factored_form const& f, index_set vars, std::vector<xor_slot> const& slots )
  {
    if ( f.constant )
      fire( vars, slots );
    for ( auto t : f.remainder )
      fire( vars | t, slots );
    if ( f.linear.size() == 1u )
      fire( vars | f.linear, slots );
    else if ( f.linear.size() >= 2u )
    {
      auto inner = slots;
      inner.push_back( { f.linear, f.linear.back() } );
      fire( vars, inner );
    }
    for ( auto const& c : f.chains )
      emit_chain( c, vars, slots );
  }

  void emit_chain( factor_chain const& c, index_set vars, std::vector<xor_slot> const& slots )
  {
    auto const accumulator = c.links.front().group.back();
    for ( auto const& l : c.links )
    {
      auto inner = slots;
      inner.push_back( { l.group, accumulator } );
      emit_form( l.coefficient, vars, inner );
    }
  }

  void emit_linear( index_set linear )
  {
    std::vector<uint32_t> blocks;
    index_set uncovered;
    for ( ;; )
    {
      blocks.clear();
      uncovered = linear;
      for ( ;; )
      {
        int best = -1;
        for ( uint32_t w = 0; w < n_; ++w )
        {
          auto const s = content_[w];
          if ( s.size() >= 2u && s.is_subset_of( uncovered ) &&
               ( best < 0 || s.size() > content_[static_cast<uint32_t>( best )].size() ) )
            best = static_cast<int>( w );
        }
        if ( best < 0 )
          break;
        blocks.push_back( static_cast<uint32_t>( best ) );
        uncovered = uncovered - content_[static_cast<uint32_t>( best )];
      }

      index_set dirty;
      uncovered.for_each( [&]( uint32_t v ) {
        if ( !clean( v ) )
          dirty.insert( v );
      } );
      if ( dirty.empty() )
        break;
      undo( dirty );
    }

    if ( !blocks.empty() )
    {
      auto const sink = *std::max_element( blocks.begin(), blocks.end() );
      std::sort( blocks.begin(), blocks.end() );
      for ( auto b : blocks )
      {
        if ( b != sink )
          apply( b, sink );
      }
      circ_.add_gate( index_set{ sink }, n_ );
    }
    uncovered.for_each( [&]( uint32_t v ) { circ_.add_gate( index_set{ v }, n_ ); } );
  }

  uint32_t n_;
  circuit circ_;
  std::vector<index_set> content_;
  std::vector<modification> log_;
};

} // namespace detail

/*! \brief Emits the circuit for `f` over `num_vars` inputs; see the file comment for the gate order. */
inline circuit emit( factored_form const& f, uint32_t num_vars, bool restore = true )
{
  return detail::form_emitter( num_vars ).run( f, restore );
}

enum class synthesis_method
{
  direct,
  factor
};

inline std::string_view to_string( synthesis_method m )
{
  return m == synthesis_method::direct ? "direct" : "factor";
}

inline synthesis_method parse_method( std::string_view s )
{
  if ( s == "direct" )
    return synthesis_method::direct;
  if ( s == "factor" )
    return synthesis_method::factor;
  throw std::invalid_argument( "unknown synthesis method '" + std::string( s ) + "'" );
}

struct synthesis_result
{
  circuit circ;
  size_t gates = 0u;
  uint64_t cost_naive = 0u;
  uint64_t cost_reduced = 0u;
};

inline synthesis_result synthesize( pprm_expr const& e, synthesis_method method, bool restore = true )
{
  synthesis_result r;
  r.circ = method == synthesis_method::direct ? direct_synthesize( e ) : emit( factorize( e ), e.num_vars(), restore );
  r.gates = gate_count( r.circ );
  r.cost_naive = quantum_cost( r.circ, cost_model::naive() );
  r.cost_reduced = quantum_cost( r.circ, cost_model::reduced() );
  return r;
}

} // namespace rmsynth
