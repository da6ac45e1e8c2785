#pragma once

#include "taut/relgen.hpp"

#include <string>
#include <vector>

namespace taut {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // expected vs computed, exact forms
};

std::vector<std::string> check_names();

// Run one of the built-in named verifications; throws std::invalid_argument
// for unknown names.
CheckResult run_check(const std::string& name);

// Shared computations.
namespace checks {

// Relation generation at genus 4 with the standard desk-scale bounds.
std::vector<RelationRecord> genus4_records(int d);

// (classical index multiset -> coefficient) image of a polynomial whose
// kappa-factors are all powers of e; used for comparing output across d.
std::string classical_form(const KappaPolynomial& p);

CheckResult check_g4_relations();
CheckResult check_lowest_relation(int d);
CheckResult check_fin_gen_inner();
CheckResult check_binomial_g2k0();
CheckResult check_pullback_d5();
CheckResult check_d_independence();

}  // namespace checks

}  // namespace taut
