#pragma once

#include "hopfdoubles/exactlin.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hopfdoubles {

/// The first failing basis tuple of an identity, with both sides.
struct Witness {
    std::vector<std::size_t> indices;
    std::string labels;  // the tuple spelled with basis names
    SparseVec lhs;
    SparseVec rhs;
    std::string lhs_text;
    std::string rhs_text;
};

struct VerificationReport {
    std::string name;
    bool passed = true;
    std::optional<Witness> witness;
    std::size_t cases = 0;
    std::vector<std::string> notes;
};

bool all_passed(std::span<const VerificationReport> reports);

/// First failure wins; cases add up; notes are concatenated.
VerificationReport merge_reports(std::string name, std::span<const VerificationReport> parts);

/// A failed report carrying a witness built from the two sides of an identity.
VerificationReport failed_report(std::string name, Witness witness);

std::string describe(const VerificationReport& report);

/// Exhaustive identity sweep over index tuples in lexicographic order.
///
/// `dims` bounds each tuple position, `admit` filters tuples (degree cutoffs),
/// `sides` evaluates both sides of the identity at a tuple. The sweep stops at
/// the first tuple where the sides differ and records it as the witness.
struct IdentitySweep {
    std::string name;
    std::vector<std::size_t> dims;
    std::function<bool(std::span<const std::size_t>)> admit;
    std::function<std::pair<SparseVec, SparseVec>(std::span<const std::size_t>)> sides;
    /// Labels for each tuple position, used for the witness text.
    std::vector<std::vector<std::string>> labels;
    /// Factor bases of the space the sides live in, for formatting.
    std::vector<std::vector<std::string>> output_factors;

    VerificationReport run() const;
};

/// Calls fn on every tuple in lexicographic order until fn returns false.
void for_each_tuple(std::span<const std::size_t> dims,
                    const std::function<bool(std::span<const std::size_t>)>& fn);

}  // namespace hopfdoubles
