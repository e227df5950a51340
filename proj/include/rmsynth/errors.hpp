/*!
  \file errors.hpp
  \brief Exception types shared across the library
*/

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rmsynth
{

/*! \brief Malformed textual input. `line` and `column` are 1-based; 0 means unknown. */
class parse_error : public std::runtime_error
{
public:
  parse_error( std::string const& what, uint32_t line = 0u, uint32_t column = 0u )
      : std::runtime_error( format( what, line, column ) ), message_( what ), line_( line ), column_( column )
  {
  }

  uint32_t line() const { return line_; }
  uint32_t column() const { return column_; }
  std::string const& message() const { return message_; }

  /*! \brief Same error attributed to a line of an enclosing file. */
  parse_error at_line( uint32_t line ) const { return parse_error( message_, line, column_ ); }

private:
  static std::string format( std::string const& what, uint32_t line, uint32_t column )
  {
    if ( line == 0u && column == 0u )
      return what;
    std::string pos = line ? "line " + std::to_string( line ) : std::string{};
    if ( column )
      pos += ( pos.empty() ? "" : ", " ) + std::string( "column " ) + std::to_string( column );
    return pos + ": " + what;
  }

  std::string message_;
  uint32_t line_;
  uint32_t column_;
};

/*! \brief Exhaustive enumeration refused because the input count exceeds the configured guard. */
class guard_exceeded : public std::runtime_error
{
public:
  guard_exceeded( uint32_t inputs, uint32_t guard )
      : std::runtime_error( "exhaustive enumeration over " + std::to_string( inputs ) +
                            " inputs exceeds the guard of " + std::to_string( guard ) + "; use sampling" ),
        inputs_( inputs ),
        guard_( guard )
  {
  }

  uint32_t inputs() const { return inputs_; }
  uint32_t guard() const { return guard_; }

private:
  uint32_t inputs_;
  uint32_t guard_;
};

} // namespace rmsynth
