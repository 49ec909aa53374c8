#ifndef ISOBAR_ERRORS_HPP
#define ISOBAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace isobar
{

// Operation called outside its mathematical domain (empty exponent vector,
// m <= 0 for a global evaluation, weight entry that was never supplied...).
class domain_error : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Two isobaric polynomials of different level were combined additively.
class grading_error : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

// An evaluation point does not cover every variable of the polynomial.
class arity_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Sequences of different truncation or length were combined.
class shape_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Level inverse requested for a sequence whose constant term is zero.
class not_invertible : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Malformed text or JSON input (fractions, weight specs, partitions).
class parse_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// An invariant that the mathematics guarantees was violated.
class internal_inconsistency : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

} // namespace isobar

#endif
