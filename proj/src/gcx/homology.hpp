#ifndef GCX_HOMOLOGY_HPP
#define GCX_HOMOLOGY_HPP

#include "exactla.hpp"
#include "flavor.hpp"
#include "lincomb.hpp"

#include <string>
#include <vector>

namespace gcx {

// Ordered basis of one bidegree. With degree = (v-1)k + (1-k)e and loop
// number b = e - v + 1, a bidegree (b, d) determines v = d + (k-1)b + 1 and
// e = v + b - 1, so every basis is finite and windows are unnecessary.
struct GradedBasis {
    Flavor flavor;
    int b = 0, d = 0;
    int v = 0, e = 0;                // derived; v < 1 makes the basis empty
    std::vector<std::string> keys;   // canonical keys, lexicographic
    std::vector<Graph> reps;         // canonical representatives, same order
};

GradedBasis build_basis(const Flavor& f, int b, int d);

// Matrix of the differential C_d -> C_{d+1} in the given ordered bases
// (rows = target classes, columns = source classes). Parallelizes over
// columns; set GCX_THREADS to bound the worker count.
SparseMatrix differential_matrix(const GradedBasis& from, const GradedBasis& to);

struct DegreeReport {
    int d = 0;
    long dim = 0;      // dim C_d
    long rank_out = 0; // rank of d : C_d -> C_{d+1}
    long rank_in = 0;  // rank of d : C_{d-1} -> C_d
    long h = 0;        // dim - rank_out - rank_in
};

struct CohomologyReport {
    Flavor flavor;
    int b = 0;
    std::vector<DegreeReport> rows;
};

// Cohomology dimensions for degrees dmin..dmax at fixed loop number. When
// sms_dir is nonempty, each assembled matrix d : C_d -> C_{d+1} is written
// there as <flavor>_k<k>_b<b>_d<d>.sms.
CohomologyReport cohomology_dims(const Flavor& f, int b, int dmin, int dmax,
                                 const std::string& sms_dir = "");

std::string cohomology_report_to_json(const CohomologyReport& r);

} // namespace gcx

#endif
