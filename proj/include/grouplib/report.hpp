#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "grouplib/commdeg.hpp"
#include "grouplib/group.hpp"
#include "grouplib/iso.hpp"
#include "grouplib/numtheory.hpp"
#include "grouplib/rational.hpp"
#include "grouplib/structure.hpp"

namespace grouplib {

// All invariants of one group; the executable form of one table row.
struct AnalysisReport {
    long order = 0;
    long center_order = 0;
    long derived_order = 0;
    long derived_center_order = 0;  // |G' meet Z|
    Rational pr;
    std::vector<int> class_sizes;
    std::optional<int> nilpotency;  // nullopt = not nilpotent
    IsoLabel derived_label;
    IsoLabel derived_center_label;
    IsoLabel center_quotient_label;  // G/Z
    long smallest_prime = 0;
    bool derived_in_center = false;
    bool cg_derived_abelian = false;  // C_G(G') abelian
};

inline AnalysisReport analyze(const FiniteGroup& g) {
    AnalysisReport r;
    r.order = g.order();
    Subgroup z = center(g);
    Subgroup d = commutator_subgroup(g);
    Subgroup dz(g, d.members() & z.members());
    r.center_order = z.order();
    r.derived_order = d.order();
    r.derived_center_order = dz.order();
    r.pr = pr_exact(g);

    // third, independent route: sum of centralizer orders over |G|^2
    mpz_class csum = 0;
    for (int x = 0; x < g.order(); ++x) csum += centralizer(g, x).order();
    if (r.pr != Rational(csum, mpz_class(g.order()) * g.order()))
        throw GroupError("analyze: centralizer-sum route disagrees with Pr");

    r.class_sizes = conjugacy_classes(g).sizes;
    r.nilpotency = nilpotency_class(g);
    r.derived_label = recognize(subgroup_as_group(g, d));
    r.derived_center_label = recognize(subgroup_as_group(g, dz));
    r.center_quotient_label = recognize(quotient(g, z).first);
    r.smallest_prime = g.order() > 1 ? smallest_prime_divisor(g.order()) : 1;
    r.derived_in_center = d.members().subset_of(z.members());
    Subgroup c = centralizer_set(g, d.members());
    r.cg_derived_abelian = is_abelian(subgroup_as_group(g, c));

    if (r.derived_center_order != 0 &&
        (r.derived_order % r.derived_center_order != 0 ||
         r.center_order % r.derived_center_order != 0))
        throw GroupError("analyze: |G' meet Z| fails divisibility");
    return r;
}

// Stable TSV: one `key<TAB>value` line per field.
inline std::string report_tsv(const AnalysisReport& r) {
    std::ostringstream o;
    o << "order\t" << r.order << "\n";
    o << "pr\t" << r.pr.str() << "\n";
    o << "center_order\t" << r.center_order << "\n";
    o << "derived_order\t" << r.derived_order << "\n";
    o << "derived_center_order\t" << r.derived_center_order << "\n";
    o << "derived\t" << r.derived_label.str() << "\n";
    o << "derived_center\t" << r.derived_center_label.str() << "\n";
    o << "center_quotient\t" << r.center_quotient_label.str() << "\n";
    o << "class_sizes\t";
    for (size_t i = 0; i < r.class_sizes.size(); ++i) o << (i ? "," : "") << r.class_sizes[i];
    o << "\n";
    o << "nilpotency_class\t" << (r.nilpotency ? std::to_string(*r.nilpotency) : "not-nilpotent")
      << "\n";
    o << "smallest_prime\t" << r.smallest_prime << "\n";
    o << "derived_in_center\t" << (r.derived_in_center ? "yes" : "no") << "\n";
    o << "cg_derived_abelian\t" << (r.cg_derived_abelian ? "yes" : "no") << "\n";
    return o.str();
}

}  // namespace grouplib
