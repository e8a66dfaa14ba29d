#pragma once

#include <stdexcept>
#include <string>

namespace zdg {

// An explicit work budget was exhausted (search nodes, closure size, ...).
// The message carries whatever partial bound was established before bailing.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// A certified property failed to hold (e.g. "this permutation is a graph
// automorphism").  Seeing one means the construction itself is wrong, not
// merely the input; it is never caught and repaired internally.
class contract_violation : public std::logic_error {
public:
    explicit contract_violation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace zdg
