#ifndef AWAREKIT_AXIOMATICS_HPP
#define AWAREKIT_AXIOMATICS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "awarekit/formula.hpp"
#include "awarekit/model.hpp"
#include "awarekit/oracle.hpp"
#include "awarekit/signature.hpp"

namespace awarekit {

struct ProofContext {
  Signature sig;
  // Whether the declared objects are all the objects there are.
  bool objects_finite = true;
};

// Schema names: Prop, AGP, KA, K, T, 4, 5, A0, Con, 1_forallx, 1_forallX,
// K_forallx, K_forallX, N_forallx, N_forallX, Barcan_x, Barcan_X, FA_X, Fin_x.
const std::vector<std::string>& axiom_names();

// Names of every schema f instantiates. Fin_x is only reported when the
// context's objects are finite.
std::set<std::string> recognize_axiom(const Formula& f, const ProofContext& ctx);
bool is_instance(const std::string& axiom, const Formula& f, const ProofContext& ctx);

// Abstracts maximal non-Boolean subformulas to letters and checks the
// result by truth table. Throws Error("LetterCapExceeded") above 20 letters.
bool is_prop_tautology_instance(const Formula& f);

// 1_forallX split by the kind of substituted term.
bool is_forallX_instance_bc(const Formula& f);
bool is_forallX_instance_concept(const Formula& f);

struct ProofLine {
  Formula formula;
  // Axiom name, or MP, Gen_K, Gen_forallx, Gen_forallX.
  std::string by;
  std::vector<std::size_t> refs;  // 1-based
  std::optional<std::string> constant;
  std::optional<std::string> pred;
};

struct ProofCheck {
  bool ok = true;
  std::size_t line = 0;  // 1-based, when !ok
  // ForwardReference, BadReference, NotAnInstance, RuleMismatch,
  // UnknownJustification, ParseError, FinRequiresFiniteObjects, Capture,
  // MissingArgument, BadProofFile.
  std::string reason;
  std::string detail;
};

ProofCheck check_proof(const std::vector<ProofLine>& lines, const ProofContext& ctx);

// Parses a JSON proof (array of {"formula", "by", "refs", "const"?, "pred"?})
// and checks it; parse failures are reported against their line.
ProofCheck check_proof_json(std::string_view text, const ProofContext& ctx);

// {"objects": [...], "predicates": [...], "concepts": [...], "agents": n,
//  "objects_finite": bool}
ProofContext proof_context_from_json(std::string_view text);

// ---------------------------------------------------------------------------
// Soundness fuzzing

struct Countermodel {
  std::size_t trial;
  std::string formula;
  std::string state;
  std::string model_json;
};

struct FuzzReport {
  std::string axiom;
  std::size_t trials = 0;
  std::size_t checked = 0;  // non-vacuous validity checks
  std::size_t skipped = 0;  // budget errors
  std::vector<Countermodel> countermodels;
};

struct FuzzOptions {
  ModelDims dims{};
  int formula_depth = 2;
  std::size_t max_countermodels = 3;
};

using InstanceGenerator = std::function<Formula(std::mt19937_64&, const Model&)>;

// Random closed instance of a named schema over m's signature.
Formula random_instance(const std::string& axiom, std::mt19937_64& rng, const Model& m,
                        int depth = 2);

// Random sentence over m's signature (symbols may be outside some states'
// languages).
Formula random_sentence(std::mt19937_64& rng, const Model& m, int depth);

FuzzReport fuzz_axiom_soundness(const std::string& axiom, std::size_t trials, std::uint64_t seed,
                                const FuzzOptions& options = {});
FuzzReport fuzz_schema(const std::string& label, const InstanceGenerator& gen, std::size_t trials,
                       std::uint64_t seed, const FuzzOptions& options = {});

}  // namespace awarekit

#endif  // AWAREKIT_AXIOMATICS_HPP
