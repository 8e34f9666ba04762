#ifndef QTV_REWRITE_HPP
#define QTV_REWRITE_HPP

#include <string>
#include <vector>

#include "qtv/presentation.hpp"

namespace qtv {

struct CertEntry {
  Scalar coeff;
  WordId left = kEmptyWord;
  std::string rel_id;
  WordId right = kEmptyWord;
  // tensor certificates: which factor the product acts in, and the fixed
  // words occupying the remaining factors (in slot order)
  int slot = 0;
  std::vector<WordId> context;
};

enum class Status { Zero, NonzeroNormal, Undecided, Skipped, Failed };

std::string status_str(Status s);

struct ReductionOutcome {
  Status status = Status::Undecided;
  NCPoly normal_form;
  std::vector<CertEntry> certificate;
  bool window_ok = true;
  size_t rows_used = 0;
};

struct StraightenResult {
  NCPoly nf;
  bool window_ok = true;
};

/// Exhaustively apply the presentation's exact rewrites (leftmost redex
/// first).  Memoized per word on the presentation.
StraightenResult straighten(const NCPoly& x, const Presentation& P);

/// Same normal form, but records one certificate entry per rewrite step so
/// that  x = nf + sum coeff * left * relation * right  exactly.
NCPoly straighten_traced(const NCPoly& x, const Presentation& P,
                         std::vector<CertEntry>& trace, bool& window_ok);

struct MemberOptions {
  int cap = 12;              // total word length bound for u * r * v products
  int rounds = 8;            // support-activation rounds
  int blind_len = 0;         // extra blind multiplier enumeration length (0 = off)
  size_t max_rows = 60000;   // safety guard
};

/// Bounded ideal membership: straighten, then decide whether the normal form
/// lies in the span of straightened products u * r * v over residual
/// relations r with |u| + |r| + |v| <= cap.  Zero verdicts carry replayable
/// certificates; failed searches report Undecided or NonzeroNormal, never a
/// non-membership claim.
ReductionOutcome ideal_member(const NCPoly& x, const Presentation& P, MemberOptions opt);
inline ReductionOutcome ideal_member(const NCPoly& x, const Presentation& P, int cap) {
  MemberOptions o;
  o.cap = cap;
  return ideal_member(x, P, o);
}

/// Membership of a tensor element in I (x) A + A (x) I (any arity: the ideal
/// may act in any one slot).
ReductionOutcome tensor_ideal_member(const TensorPoly& t, const Presentation& P,
                                     MemberOptions opt);
inline ReductionOutcome tensor_ideal_member(const TensorPoly& t, const Presentation& P,
                                            int cap) {
  MemberOptions o;
  o.cap = cap;
  return tensor_ideal_member(t, P, o);
}

/// Straighten every tensor factor.
TensorPoly straighten_tensor(const TensorPoly& t, const Presentation& P, bool* ok = nullptr);

/// Replays a certificate: evaluates sum coeff * left * relation * right in the
/// free algebra and compares against x.
bool replay_certificate(const NCPoly& x, const std::vector<CertEntry>& cert,
                        const Presentation& P);
bool replay_certificate_tensor(const TensorPoly& t, const std::vector<CertEntry>& cert,
                               const Presentation& P);

struct FitConstraint {
  NCPoly base;                  // used when tensor.arity() considered scalar... plain constraint
  std::vector<NCPoly> templates;
  bool is_tensor = false;
  TensorPoly tbase;
  std::vector<TensorPoly> ttemplates;
};

struct FitResult {
  bool feasible = false;
  std::vector<Scalar> values;  // canonical point (free variables at zero)
};

/// Solve for coefficients c making  base + sum c_i template_i  a member of the
/// (tensor) ideal for every constraint simultaneously.
FitResult fit_coefficients(const std::vector<FitConstraint>& constraints,
                           const Presentation& P, MemberOptions opt);

}  // namespace qtv

#endif
