#ifndef COXH4_SERIALIZE_HPP
#define COXH4_SERIALIZE_HPP

#include <cstdint>
#include <string>

#include "coxh4/diffop.hpp"
#include "coxh4/polynomial.hpp"
#include "coxh4/roots.hpp"

namespace coxh4 {

// Canonical text form: one header line, then one term per line in canonical
// order, exponents space-separated, coefficient as "a/b" or "a/b+c/d*sqrt5".
std::string serialize_polynomial(const Polynomial& p);
Polynomial parse_polynomial(const std::string& text);

std::string serialize_operator(const DiffOperator& op);
DiffOperator parse_operator(const std::string& text);

std::string serialize_matrix(const Matrix4& m);

// FNV-1a over bytes; used for cache keys
std::uint64_t fnv1a(const std::string& data);
std::string hash_hex(const std::string& data);

}  // namespace coxh4

#endif
