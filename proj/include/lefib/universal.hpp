#ifndef LEFIB_UNIVERSAL_HPP
#define LEFIB_UNIVERSAL_HPP

#include "lefib/cobordism.hpp"

namespace lefib {

// Output of the dimension-2 construction: one critical disk per generator of
// the presentation, one 0-framed 2-handle per relator (the relator loops),
// and the torus amendment (fiber sum with the two torus bundles over the
// sphere) exactly when the fiber is the torus. H_2 of the resulting base is
// free of rank l.
struct UniversalData2 {
    Presentation presentation;
    std::size_t critical_disks = 0;
    std::vector<TwistWord> relator_loops;
    std::vector<Int> framings;
    bool torus_amendment = false;
    std::size_t h2_rank = 0;
};

UniversalData2 build_universal_dim2(const Presentation& p);

// Honest verdict levels for conditions that are not machine-decidable in the
// full mapping class group.
enum class ConditionStatus { verified_by_construction, homologically_consistent, declared, failed };

const char* condition_status_name(ConditionStatus s);

struct ConditionReport {
    std::string name;
    ConditionStatus status = ConditionStatus::declared;
    std::string detail;

    bool ok() const { return status != ConditionStatus::failed; }
};

struct UniversalityReport2 {
    std::vector<ConditionReport> conditions;
    bool all_ok() const;
};

UniversalityReport2 universality_report_dim2(const UniversalData2& u);

// The fibration over the sphere carried by the i-th relator loop (0-based):
// its Lefschetz word is the relator itself.
FibrationData lambda_generator(const UniversalData2& u, std::size_t i);

struct CobordismImageReport {
    std::vector<std::string> relator_names;
    std::vector<std::pair<Int, Int>> sigma_eta;
    LatticeBasis lattice;
};

// Per-relator (sigma, eta) and the Hermite basis of the subgroup of Z^2 they
// generate: a certified lower bound for the image of (sigma, eta) under the
// lambda epimorphism.
CobordismImageReport cobordism_image_report(const UniversalData2& u);

// Symbolic plan for the dimension-3 construction.
struct HandleStep {
    enum class Kind { band, one_handle, two_handle, fibersum_torus_bundle, three_handle };
    Kind kind;
    std::size_t first = 0, second = 0;  // band endpoints (1-based disks)
    std::string label;                  // handle label or word name
};

struct HandlePlan3 {
    std::size_t disk_count = 0;
    std::vector<HandleStep> steps;
};

// Emits the ordered plan: k-1 bands joining consecutive critical disks, one
// 1-handle per declared marked mapping class group generator, a 0-framed
// 2-handle per relator, the two torus-bundle fiber sums when the fiber is
// the torus, and one 3-handle per declared generator of ker omega^s.
HandlePlan3 build_universal_dim3_plan(const Presentation& p,
                                      const std::vector<std::string>& marked_generators,
                                      const std::vector<std::string>& kernel_sphere_labels = {});

struct UniversalityReport3 {
    std::vector<ConditionReport> conditions;
    bool all_ok() const;
};

UniversalityReport3 universality_report_dim3(const HandlePlan3& plan);

}  // namespace lefib

#endif
