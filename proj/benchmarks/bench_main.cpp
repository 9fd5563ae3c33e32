#include <benchmark/benchmark.h>

#include <random>

#include "awarekit/axiomatics.hpp"
#include "awarekit/contracts.hpp"
#include "awarekit/error.hpp"
#include "awarekit/model_io.hpp"
#include "awarekit/oracle.hpp"
#include "awarekit/parser.hpp"

using namespace awarekit;

namespace {

std::string fixture(const std::string& name) { return std::string(AWAREKIT_FIXTURES) + "/" + name; }

ModelDims dims_for(std::int64_t preds) {
  ModelDims d;
  d.states = 4;
  d.predicates = static_cast<std::size_t>(preds);
  d.objects = 3;
  d.common_awareness_at_star = true;
  return d;
}

}  // namespace

static void BM_Parse(benchmark::State& state) {
  Model m = load_model(fixture("ex1.json"));
  const std::string text = "forallp X. (X(d_cmp) -> exists x. (K 1 (X(x) & QC(x)) | !A 2 R(d_$)))";
  for (auto _ : state) benchmark::DoNotOptimize(parse(text, m.sig));
}
BENCHMARK(BM_Parse);

// Cold evaluation of random sentences with one predicate quantifier;
// the range grows doubly exponentially in |P_w|.
static void BM_SatRandom(benchmark::State& state) {
  Model m = random_model(1, dims_for(state.range(0)));
  std::mt19937_64 rng(1);
  std::vector<Formula> fs;
  for (int k = 0; k < 32; ++k) fs.push_back(random_sentence(rng, m, 3));
  for (auto _ : state) {
    EvalOptions o;
    o.memoize = false;
    Evaluator ev(m, o);
    for (const auto& f : fs) {
      try {
        benchmark::DoNotOptimize(ev.sat(0, f));
      } catch (const Error&) {
      }
    }
  }
}
BENCHMARK(BM_SatRandom)->DenseRange(1, 4);

static void BM_Synthesize(benchmark::State& state) {
  ModelDims d = dims_for(state.range(0));
  d.states = 6;
  Model m = random_model(2, d);
  random_utilities(m, 2, Assumption::kA2);
  for (auto _ : state) {
    Evaluator ev(m);
    benchmark::DoNotOptimize(synthesize(ev, 0, Mode::kFull));
  }
}
BENCHMARK(BM_Synthesize)->DenseRange(1, 4);

static void BM_EnumerateSentences(benchmark::State& state) {
  Model m = load_model(fixture("ex2.json"));
  EnumerationBudget b;
  b.max_size = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_sentences(m.sig, m.aware(1, 0), b));
}
BENCHMARK(BM_EnumerateSentences)->DenseRange(2, 5);

static void BM_CheckProofCorpus(benchmark::State& state) {
  ProofContext ctx = proof_context_from_json(read_file(fixture("sig.json")));
  const std::string text = read_file(fixture("proofs/golden_gen_k_symbol_free.json"));
  for (auto _ : state) benchmark::DoNotOptimize(check_proof_json(text, ctx));
}
BENCHMARK(BM_CheckProofCorpus);
BENCHMARK_MAIN();
