#ifndef CHARVAR_ERROR_HPP
#define CHARVAR_ERROR_HPP

#include <stdexcept>
#include <string>

namespace charvar
{

// Base class of every error thrown by the library.
class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Operands live in different variable contexts, or an operation was asked
// for a context it does not support.
class context_error : public error
{
public:
    using error::error;
};

class not_divisible : public error
{
public:
    using error::error;
};

class not_binomial : public error
{
public:
    using error::error;
};

// A denominator factor survived exact division. Either a conjectured
// polynomiality statement is false or there is a bug; the offending factor
// is kept so callers can report it.
class not_polynomial : public error
{
public:
    not_polynomial(const std::string &factor, const std::string &context)
        : error("not a polynomial: factor " + factor + " does not divide the numerator" +
                (context.empty() ? std::string{} : " (" + context + ")")),
          m_factor(factor)
    {
    }
    const std::string &factor() const noexcept
    {
        return m_factor;
    }

private:
    std::string m_factor;
};

class non_integer_coefficient : public error
{
public:
    using error::error;
};

class negative_exponent_at_zero : public error
{
public:
    using error::error;
};

class constant_term_not_one : public error
{
public:
    using error::error;
};

class unsupported_genus : public error
{
public:
    using error::error;
};

class kind_mismatch : public error
{
public:
    using error::error;
};

// Group oracle.
class central_element_unavailable : public error
{
public:
    using error::error;
};

class group_too_large : public error
{
public:
    using error::error;
};

class lift_failure : public error
{
public:
    using error::error;
};

class non_integral_count : public error
{
public:
    using error::error;
};

} // namespace charvar

#endif
