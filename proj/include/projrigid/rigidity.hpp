#pragma once

#include "projrigid/cohomology.hpp"

namespace projrigid {

// Verdict assembled from the H^1 dimensions in the three coefficient modules.
// For cusped input (k > 0) rigidity means dim H^1(v) = k; for k = 0 it means
// dim H^1(sl4) = 0. The su(3,1) dimension is the derived sum
// dim H^1(so31) + dim H^1(v), and the Weil-Garland flag records whether
// dim H^1(so31) = 2k (a sanity check, not an error condition).
struct RigidityVerdict {
    Eigen::Index k = 0;
    Eigen::Index h1_v = 0;
    Eigen::Index h1_so31 = 0;
    Eigen::Index h1_sl4 = 0;
    Eigen::Index h1_su31 = 0;
    bool rigid = false;
    bool weil_garland_ok = false;
};

// Computes the three cohomology groups (in parallel when PROJRIGID_THREADS
// allows; results do not depend on scheduling) and assembles the verdict.
RigidityVerdict rigidity_report(const Presentation& pres, const Representation& rep);

struct SlopeResult {
    long long p = 0;
    long long q = 0;
    Word gamma;                        // mu^p * la^q, freely reduced
    std::vector<bool> class_flexing;   // restriction_nontrivial per H^1(v) class
    bool flexing = false;
    bool has_certificate = false;
    FieldElement certificate;          // first nonzero pairing against the
                                       // canonical invariant basis for gamma
};

struct SlopeScan {
    int cusp = 0;
    RigidityVerdict verdict;
    std::vector<SlopeResult> slopes;
};

// Scans the listed coprime slopes on one cusp; requires the rigidity verdict
// to be rigid, since flexing slopes are only defined in that case.
SlopeScan flexing_scan(const Presentation& pres, const Representation& rep, int cusp,
                       const std::vector<std::pair<long long, long long>>& slopes);

// Citation-backed inference printer for a verified flexing slope (p, q): the
// fillings (P, Q) on the line q*P - p*Q = c are predicted to be rigid for all
// sufficiently large fillings. Performs no analytic computation and never
// claims a threshold. Errors when (p, q) is absent from the scan or not
// flexing there.
std::string filling_prediction(const SlopeScan& scan, long long p, long long q, long long c);

// Effective parallelism bound: PROJRIGID_THREADS clamped to at least 1, with
// hardware concurrency as the fallback.
unsigned thread_budget();

}  // namespace projrigid
