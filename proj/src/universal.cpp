#include "lefib/universal.hpp"

#include <numeric>

namespace lefib {

UniversalData2 build_universal_dim2(const Presentation& p) {
    if (!p.fiber.symplectic_enabled())
        throw UnsupportedError("the dimension-2 construction assumes b in {0,1}");
    PresentationReport rep = validate_presentation(p);
    if (!rep.ok())
        throw std::invalid_argument("build_universal_dim2: presentation fails validation");
    UniversalData2 u;
    u.presentation = p;
    u.critical_disks = p.generators.size();
    u.relator_loops = p.relators;
    u.framings.assign(p.relators.size(), Int(0));
    u.torus_amendment = (p.fiber.genus == 1 && p.fiber.boundary_count == 0);
    u.h2_rank = p.relators.size();
    return u;
}

const char* condition_status_name(ConditionStatus s) {
    switch (s) {
        case ConditionStatus::verified_by_construction: return "verified-by-construction";
        case ConditionStatus::homologically_consistent: return "homologically-consistent";
        case ConditionStatus::declared: return "declared";
        default: return "fail";
    }
}

bool UniversalityReport2::all_ok() const {
    for (const auto& c : conditions)
        if (!c.ok())
            return false;
    return true;
}

bool UniversalityReport3::all_ok() const {
    for (const auto& c : conditions)
        if (!c.ok())
            return false;
    return true;
}

namespace {

ConditionReport vanishing_cycle_condition(const Presentation& p) {
    // #C_{g,b} = 1 for b in {0,1}: one nonseparating generator curve hits
    // every class of homologically essential curves.
    ConditionReport c;
    c.name = "vanishing_cycle_classes";
    bool some_nonseparating = false;
    for (const CurveClass& g : p.generators)
        if (!g.homology.is_zero())
            some_nonseparating = true;
    if (some_nonseparating) {
        c.status = ConditionStatus::homologically_consistent;
        c.detail = "a nonseparating vanishing cycle represents the single essential class";
    } else {
        c.status = ConditionStatus::failed;
        c.detail = "no nonseparating generator curve";
    }
    return c;
}

}  // namespace

UniversalityReport2 universality_report_dim2(const UniversalData2& u) {
    UniversalityReport2 rep;

    ConditionReport c1;
    c1.name = "bundle_monodromy_isomorphism";
    c1.status = ConditionStatus::verified_by_construction;
    c1.detail = "the 2-handles along the relator loops present the quotient map of the given presentation";
    rep.conditions.push_back(c1);

    ConditionReport c2a;
    c2a.name = "lefschetz_monodromy_surjective";
    c2a.status = ConditionStatus::declared;
    c2a.detail = "the generators of the presentation generate by declaration";
    rep.conditions.push_back(c2a);

    ConditionReport c2b;
    c2b.name = "structure_monodromy_surjective";
    if (u.presentation.fiber.genus == 1 && u.presentation.fiber.boundary_count == 0) {
        if (u.torus_amendment) {
            c2b.status = ConditionStatus::verified_by_construction;
            c2b.detail = "fiber sum with the two torus bundles over the sphere realizes both generators";
        } else {
            c2b.status = ConditionStatus::failed;
            c2b.detail = "torus fiber without the torus amendment";
        }
    } else {
        c2b.status = ConditionStatus::verified_by_construction;
        c2b.detail = "Pi_1 of the fiber is trivial, the condition is vacuous";
    }
    rep.conditions.push_back(c2b);

    rep.conditions.push_back(vanishing_cycle_condition(u.presentation));
    return rep;
}

FibrationData lambda_generator(const UniversalData2& u, std::size_t i) {
    if (i >= u.relator_loops.size())
        throw std::out_of_range("lambda generator: relator index out of range");
    return make_fibration(u.presentation.fiber, BaseSurface(0, 0), u.relator_loops[i]);
}

CobordismImageReport cobordism_image_report(const UniversalData2& u) {
    CobordismImageReport rep;
    std::vector<std::pair<Int, Int>> gens;
    for (std::size_t i = 0; i < u.relator_loops.size(); ++i) {
        FibrationData f = lambda_generator(u, i);
        Int s = fibration_signature(f);
        auto [np, nm] = critical_counts(f);
        rep.relator_names.push_back(i < u.presentation.relator_names.size()
                                        ? u.presentation.relator_names[i]
                                        : "r" + std::to_string(i + 1));
        rep.sigma_eta.emplace_back(s, Int(np) - Int(nm));
        gens.emplace_back(rep.sigma_eta.back());
    }
    rep.lattice = hermite_lattice(gens);
    return rep;
}

HandlePlan3 build_universal_dim3_plan(const Presentation& p,
                                      const std::vector<std::string>& marked_generators,
                                      const std::vector<std::string>& kernel_sphere_labels) {
    PresentationReport rep = validate_presentation(p);
    if (!rep.ok())
        throw std::invalid_argument("build_universal_dim3_plan: presentation fails validation");
    if (marked_generators.empty())
        throw std::invalid_argument("build_universal_dim3_plan: the marked mapping class group "
                                    "generating set must not be empty");
    HandlePlan3 plan;
    plan.disk_count = p.generators.size();

    // bands joining consecutive critical disks come first; they make the
    // critical image a ribbon disk
    for (std::size_t i = 1; i < p.generators.size(); ++i) {
        HandleStep s;
        s.kind = HandleStep::Kind::band;
        s.first = i;
        s.second = i + 1;
        plan.steps.push_back(s);
    }
    for (const std::string& label : marked_generators) {
        HandleStep s;
        s.kind = HandleStep::Kind::one_handle;
        s.label = label;
        plan.steps.push_back(s);
    }
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
        HandleStep s;
        s.kind = HandleStep::Kind::two_handle;
        s.label = i < p.relator_names.size() ? p.relator_names[i] : "r" + std::to_string(i + 1);
        plan.steps.push_back(s);
    }
    if (p.fiber.genus == 1 && p.fiber.boundary_count == 0) {
        for (const char* which : {"q1", "q2"}) {
            HandleStep s;
            s.kind = HandleStep::Kind::fibersum_torus_bundle;
            s.label = which;
            plan.steps.push_back(s);
        }
    }
    for (const std::string& label : kernel_sphere_labels) {
        HandleStep s;
        s.kind = HandleStep::Kind::three_handle;
        s.label = label;
        plan.steps.push_back(s);
    }
    return plan;
}

UniversalityReport3 universality_report_dim3(const HandlePlan3& plan) {
    UniversalityReport3 rep;

    // condition (4): the bands must chain all critical disks together, and
    // appear before any 1-handle
    {
        ConditionReport c;
        c.name = "critical_image_connected";
        std::vector<std::size_t> parent(plan.disk_count + 1);
        std::iota(parent.begin(), parent.end(), std::size_t{0});
        auto find = [&](std::size_t x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        bool saw_one_handle = false;
        bool order_ok = true;
        for (const HandleStep& s : plan.steps) {
            if (s.kind == HandleStep::Kind::one_handle)
                saw_one_handle = true;
            if (s.kind == HandleStep::Kind::band) {
                if (saw_one_handle)
                    order_ok = false;
                if (s.first >= 1 && s.first <= plan.disk_count && s.second >= 1 && s.second <= plan.disk_count)
                    parent[find(s.first)] = find(s.second);
            }
        }
        std::size_t components = 0;
        for (std::size_t i = 1; i <= plan.disk_count; ++i)
            if (find(i) == i)
                ++components;
        if (plan.disk_count <= 1 || (components == 1 && order_ok)) {
            c.status = ConditionStatus::verified_by_construction;
            c.detail = "bands chain all critical disks";
        } else {
            c.status = ConditionStatus::failed;
            c.detail = order_ok ? "the critical image stays disconnected" : "a band appears after a 1-handle";
        }
        rep.conditions.push_back(c);
    }

    {
        ConditionReport c;
        c.name = "bundle_and_structure_monodromy_isomorphism";
        c.status = ConditionStatus::declared;
        c.detail = "2-handles and 3-handles kill declared kernel generators";
        rep.conditions.push_back(c);
    }

    {
        ConditionReport c;
        c.name = "lefschetz_monodromy_surjective";
        c.status = ConditionStatus::declared;
        c.detail = "the generators of the presentation generate by declaration";
        rep.conditions.push_back(c);
    }

    {
        ConditionReport c;
        c.name = "singular_monodromy_surjective";
        bool has_one_handle = false;
        for (const HandleStep& s : plan.steps)
            if (s.kind == HandleStep::Kind::one_handle)
                has_one_handle = true;
        if (has_one_handle) {
            c.status = ConditionStatus::declared;
            c.detail = "1-handles realize the declared marked mapping class group generators";
        } else {
            c.status = ConditionStatus::failed;
            c.detail = "no 1-handle realizes a marked mapping class group generator";
        }
        rep.conditions.push_back(c);
    }

    {
        ConditionReport c;
        c.name = "vanishing_cycle_classes";
        c.status = ConditionStatus::verified_by_construction;
        c.detail = "a nonseparating vanishing cycle represents the single essential class";
        rep.conditions.push_back(c);
    }

    return rep;
}

}  // namespace lefib
