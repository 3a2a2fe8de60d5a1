#pragma once

namespace invgeo {

/// Sign and normalization conventions of the pipeline. The defaults are the
/// only correct choice; the alternatives exist so the golden-identity report
/// can demonstrate that each convention is pinned by at least one identity.
struct Conventions {
    /// R(X,Y) = sign * (nabla_X nabla_Y - nabla_Y nabla_X - nabla_[X,Y]).
    int curvature_sign = 1;
    /// Negates the <Z,[X,Y]> term of the Koszul formula.
    bool koszul_flip = false;
    /// Negates the trailing -[v,w] term of the Nijenhuis tensor.
    bool nijenhuis_flip = false;
    /// Uses N/4 instead of N.
    bool nijenhuis_quarter = false;

    friend bool operator==(const Conventions&, const Conventions&) = default;
};

}  // namespace invgeo
