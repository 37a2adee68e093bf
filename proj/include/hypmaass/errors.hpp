#ifndef HYPMAASS_ERRORS_HPP
#define HYPMAASS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hypmaass
{

// Integer data outside the range where 64-bit arithmetic is exact.
class InputRangeError : public std::out_of_range
{
public:
    using std::out_of_range::out_of_range;
};

// D is not a positive discriminant (D <= 0 or D = 2, 3 mod 4).
class DiscriminantError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// A truncated sum could not reach the requested tolerance.
class ConvergenceError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// The requested quantity is a quotient by something numerically close to zero.
class IllConditionedError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Evaluation at a pole of a meromorphic function.
class PoleError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Finite-difference estimates at two step sizes disagree.
class RoughFunctionError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace hypmaass

#endif
