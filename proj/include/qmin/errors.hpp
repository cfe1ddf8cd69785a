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
  \file errors.hpp
  \brief Exception types thrown across the library

  Three failure categories are kept apart so that callers (in particular the
  command-line driver) can map them to distinct outcomes: invalid values,
  malformed input text, and refusals of requests that exceed an explicit
  capacity guard.
*/

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qmin
{

/*! \brief A value violates a documented precondition. */
class domain_error : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/*! \brief Input text could not be parsed.
 *
 * Carries the byte offset of the offending token so that drivers can point
 * at the exact spot in a diagnostic.
 */
class parse_error : public std::runtime_error
{
public:
  parse_error( std::string const& message, std::size_t position )
      : std::runtime_error( message + " (at offset " + std::to_string( position ) + ")" ),
        position_( position )
  {
  }

  std::size_t position() const noexcept
  {
    return position_;
  }

private:
  std::size_t position_;
};

/*! \brief A request exceeds an explicit capacity guard and is refused.
 *
 * Guarded routines never attempt a best-effort answer: exceeding the bound
 * raises this error instead of silently degrading into an hours-long run.
 */
class capacity_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

} // namespace qmin
