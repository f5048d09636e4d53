#include "hopfdoubles/report.hpp"

#include <sstream>

namespace hopfdoubles {

bool all_passed(std::span<const VerificationReport> reports)
{
    for (const auto& r : reports)
        if (!r.passed)
            return false;
    return true;
}

VerificationReport merge_reports(std::string name, std::span<const VerificationReport> parts)
{
    VerificationReport merged;
    merged.name = std::move(name);
    for (const auto& part : parts) {
        merged.cases += part.cases;
        for (const auto& note : part.notes)
            merged.notes.push_back(note);
        if (merged.passed && !part.passed) {
            merged.passed = false;
            merged.witness = part.witness;
            merged.notes.push_back("failing part: " + part.name);
        }
    }
    return merged;
}

VerificationReport failed_report(std::string name, Witness witness)
{
    VerificationReport r;
    r.name = std::move(name);
    r.passed = false;
    r.cases = 1;
    r.witness = std::move(witness);
    return r;
}

std::string describe(const VerificationReport& report)
{
    std::ostringstream out;
    out << (report.passed ? "PASS " : "FAIL ") << report.name << " (" << report.cases << " cases)";
    for (const auto& note : report.notes)
        out << "\n    note: " << note;
    if (report.witness) {
        const auto& w = *report.witness;
        out << "\n    witness " << w.labels << "\n      lhs = " << w.lhs_text << "\n      rhs = " << w.rhs_text;
    }
    return out.str();
}

void for_each_tuple(std::span<const std::size_t> dims,
                    const std::function<bool(std::span<const std::size_t>)>& fn)
{
    for (auto d : dims)
        if (d == 0)
            return;
    std::vector<std::size_t> idx(dims.size(), 0);
    while (true) {
        if (!fn(idx))
            return;
        std::size_t pos = dims.size();
        while (pos > 0) {
            --pos;
            if (++idx[pos] < dims[pos])
                break;
            idx[pos] = 0;
            if (pos == 0)
                return;
        }
        if (dims.empty())
            return;
    }
}

VerificationReport IdentitySweep::run() const
{
    VerificationReport report;
    report.name = name;
    for_each_tuple(dims, [&](std::span<const std::size_t> idx) {
        if (admit && !admit(idx))
            return true;
        ++report.cases;
        auto [lhs, rhs] = sides(idx);
        if (lhs == rhs)
            return true;
        Witness w;
        w.indices.assign(idx.begin(), idx.end());
        std::ostringstream label;
        label << "(";
        for (std::size_t k = 0; k < idx.size(); ++k) {
            if (k)
                label << ", ";
            if (k < labels.size() && idx[k] < labels[k].size())
                label << labels[k][idx[k]];
            else
                label << idx[k];
        }
        label << ")";
        w.labels = label.str();
        w.lhs_text = format_tensor(lhs, output_factors);
        w.rhs_text = format_tensor(rhs, output_factors);
        w.lhs = std::move(lhs);
        w.rhs = std::move(rhs);
        report.passed = false;
        report.witness = std::move(w);
        return false;
    });
    return report;
}

}  // namespace hopfdoubles
