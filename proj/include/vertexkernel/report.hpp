// Pass/fail bookkeeping shared by every checker.

#ifndef VERTEXKERNEL_REPORT_HPP
#define VERTEXKERNEL_REPORT_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace vk
{

struct CheckResult {
    std::string id;       // unique within a report, e.g. "vir/skew-symmetry"
    std::string formula;  // identity being checked, e.g. "borcherds-commutator"
    bool passed = true;
    bool informational = false; // reported, but never affects the overall verdict
    std::size_t instances = 0;
    std::string witness;  // first failing instance
    std::string note;
    double seconds = 0.0;

    CheckResult() = default;
    CheckResult(std::string id_, std::string formula_) : id(std::move(id_)), formula(std::move(formula_)) {}

    /// Count one instance; on the first failure keep the witness.
    template <typename WitnessFn>
    void record(bool ok, WitnessFn &&witness_fn)
    {
        ++instances;
        if (!ok && passed) {
            passed = false;
            witness = witness_fn();
        }
    }

    void fail(std::string why)
    {
        ++instances;
        if (passed) {
            passed = false;
            witness = std::move(why);
        }
    }
};

class ValidationReport
{
public:
    void add(CheckResult r) { checks_.push_back(std::move(r)); }
    void merge(const ValidationReport &other, const std::string &prefix = {});

    [[nodiscard]] bool passed() const;
    [[nodiscard]] const std::vector<CheckResult> &checks() const noexcept { return checks_; }
    [[nodiscard]] const CheckResult *find(const std::string &id) const;
    [[nodiscard]] const CheckResult *first_failure() const;

    /// Orders checks by id, so concurrent assembly prints deterministically.
    void sort_by_id();

    [[nodiscard]] std::string to_text(bool with_timings = false) const;

private:
    std::vector<CheckResult> checks_;
};

} // namespace vk

#endif
