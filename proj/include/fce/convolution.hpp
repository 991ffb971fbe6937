#pragma once

#include "fce/profunctor.hpp"

namespace fce {

struct AssociativityIsoFailure : std::runtime_error {
  explicit AssociativityIsoFailure(const std::string& what)
      : std::runtime_error("AssociativityIsoFailure: " + what) {}
};

struct UnitIsoFailure : std::runtime_error {
  explicit UnitIsoFailure(const std::string& what)
      : std::runtime_error("UnitIsoFailure: " + what) {}
};

// a tensor functor C x C -> C with unit object and coherence tables;
// make_monoidal checks invertibility, naturality, pentagon and triangle
struct MonoidalStructure {
  Cat base;
  ProdCat square;
  FinFunctor tensor;
  int unit = 0;
  std::vector<int> assoc, assoc_inv;  // [(a*n+b)*n+c] : (a@b)@c -> a@(b@c)
  std::vector<int> lun, lun_inv;      // I@a -> a
  std::vector<int> run, run_inv;      // a@I -> a
  bool symmetric = false;

  int tob(int a, int b) const { return tensor.on_obj[square.ob(a, b)]; }
  int tmo(int f, int g) const { return tensor.on_mor[square.mo(f, g)]; }
};
MonoidalStructure make_monoidal(Cat c, FinFunctor tensor, int unit, std::vector<int> assoc,
                                std::vector<int> lun, std::vector<int> run);
MonoidalStructure discrete_monoidal(const std::string& name, const std::vector<std::string>& elems,
                                    const std::vector<std::vector<int>>& mult, int unit);
// tensor = meet on a thin poset category, unit = the top object
MonoidalStructure meet_monoidal(Cat poset, int top);

struct DayResult {
  SetFunctor value;
  std::vector<CoendResult> pts;  // one coend over the pair category per object
};
DayResult day_convolve(const SetFunctor& f, const SetFunctor& g, const MonoidalStructure& m);

PointwiseIso day_unit_right(const SetFunctor& f, const MonoidalStructure& m);  // F * y_I = F
PointwiseIso day_unit_left(const SetFunctor& f, const MonoidalStructure& m);   // y_I * F = F
PointwiseIso day_assoc(const SetFunctor& f, const SetFunctor& g, const SetFunctor& h,
                       const MonoidalStructure& m);

struct DayHomResult {
  SetFunctor value;
  std::vector<EndResult> pts;
};
// [G, H]_x = the end over c of Set(Gc, H(c@x))
DayHomResult day_hom(const SetFunctor& g, const SetFunctor& h, const MonoidalStructure& m,
                     long long cap = 1000000);
// transposition bijection Nat(F*G, H) = Nat(F, [G,H]); needs a symmetric tensor
Witness day_hom_adjunction(const SetFunctor& f, const SetFunctor& g, const SetFunctor& h,
                           const MonoidalStructure& m, long long cap = 2000000);

// a relator from the pair category to the base plus a unit copresheaf,
// with associativity and unit bijections onto the collapsed carriers
struct PromonoidalStructure {
  Cat base;
  ProdCat square;
  Profunctor p;  // square.cat -|-> base
  SetFunctor j;  // copresheaf on base

  std::vector<CoendResult> assoc_lhs, assoc_rhs;  // [((a*n+b)*n+c)*n+d]
  std::vector<std::vector<int>> alpha, alpha_inv;
  std::vector<Witness> assoc_w;

  std::vector<CoendResult> rho_dom;  // [a*n+b] : unit in the first slot
  std::vector<std::vector<int>> rho, rho_inv;
  std::vector<Witness> rho_w;

  std::vector<CoendResult> lam_dom;  // [a*n+b] : unit in the second slot
  std::vector<std::vector<int>> lambda, lambda_inv;
  std::vector<Witness> lam_w;
};
// checks every table is a bijection natural in all free slots;
// throws AssociativityIsoFailure or UnitIsoFailure otherwise
PromonoidalStructure promonoidal_validate(const ProdCat& square, Profunctor p, SetFunctor j,
                                          std::vector<std::vector<int>> alpha,
                                          std::vector<std::vector<int>> rho,
                                          std::vector<std::vector<int>> lambda);
// P(a,b;c) = C(a@b, c), J = C(I,-), coherence induced by the tensor
PromonoidalStructure day_promonoidal(const MonoidalStructure& m);
// P(a,b;c) = C(a,c) x C(b,c), J terminal
PromonoidalStructure cauchy_promonoidal(Cat c);

DayResult p_convolve(const SetFunctor& f, const SetFunctor& g, const PromonoidalStructure& ps);
PointwiseIso p_unit_right(const SetFunctor& f, const PromonoidalStructure& ps);
PointwiseIso p_unit_left(const SetFunctor& f, const PromonoidalStructure& ps);
PointwiseIso p_assoc(const SetFunctor& f, const SetFunctor& g, const SetFunctor& h,
                     const PromonoidalStructure& ps);
// for the Cauchy structure the convolution is the pointwise product
PointwiseIso cauchy_is_pointwise(const SetFunctor& f, const SetFunctor& g,
                                 const PromonoidalStructure& ps);

struct KernelMediators {
  std::vector<std::vector<int>> k1;  // [(a*nA+b)*nC+x] : multiplicative carrier pair
  std::vector<std::vector<int>> k2;  // [x] : unit carrier pair
};

// a relator A -|-> C compatible with promonoidal structures on both ends
struct Kernel {
  Profunctor k;
  std::vector<CoendResult> k1_lhs, k1_rhs;  // [(a*nA+b)*nC+x]
  std::vector<Witness> k1;
  std::vector<CoendResult> k2_dom;  // [x], the transform of the source unit
  std::vector<Witness> k2;
  bool ok = false;
  std::string reason;
};
// validates the supplied mediator tables: bijective and natural in every free slot
Kernel kernel_check(const Profunctor& k, const PromonoidalStructure& pa,
                    const PromonoidalStructure& pc, const KernelMediators& med);
// without tables: disproves on carrier size mismatch, forces the mediator when
// every carrier has at most one element, and refuses to guess otherwise
Kernel kernel_check(const Profunctor& k, const PromonoidalStructure& pa,
                    const PromonoidalStructure& pc);
// the hom relator is a kernel from a structure to itself
Kernel hom_kernel(const PromonoidalStructure& ps);
// kernel of a functor that strictly preserves tensor and unit: K(a,x) = C(Fa, x)
Kernel functor_kernel(const FinFunctor& f, const MonoidalStructure& ma,
                      const MonoidalStructure& mc);
// relator composite of two functor kernels, mediators transported along the
// collapse of composed embeddings
Kernel compose_kernels(const FinFunctor& f, const FinFunctor& g, const MonoidalStructure& ma,
                       const MonoidalStructure& mb, const MonoidalStructure& mc);

struct FourierResult {
  SetFunctor value;  // copresheaf on the target of the kernel
  std::vector<CoendResult> pts;
};
FourierResult fourier(const Kernel& k, const SetFunctor& f);

struct FourierAdjoint {
  SetFunctor value;  // copresheaf on the source of the kernel
  std::vector<EndResult> pts;
};
FourierAdjoint fourier_right_adjoint(const Kernel& k, const SetFunctor& g,
                                     long long cap = 1000000);
Witness fourier_adjunction(const Kernel& k, const SetFunctor& f, const SetFunctor& g,
                           long long cap = 2000000);

// transform of a convolution = convolution of the transforms
PointwiseIso parseval(const Kernel& k, const SetFunctor& f, const SetFunctor& g,
                      const PromonoidalStructure& pa, const PromonoidalStructure& pc);
// transform of the source unit = target unit, by the unit witness of the kernel
PointwiseIso fourier_unit_law(const Kernel& k, const PromonoidalStructure& pa,
                              const PromonoidalStructure& pc);

}  // namespace fce
