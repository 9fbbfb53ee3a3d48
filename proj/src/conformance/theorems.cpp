#include "zksc/conformance/theorems.hpp"

#include <random>
#include <sstream>

#include "zksc/compile.hpp"
#include "zksc/conformance/gen.hpp"
#include "zksc/eval.hpp"
#include "zksc/io.hpp"
#include "zksc/pretty.hpp"

namespace zksc::conf {

const char* theorem_name(Theorem t) {
  switch (t) {
    case Theorem::Exactness: return "exactness";
    case Theorem::Frame: return "frame";
    case Theorem::Silence: return "silence";
    case Theorem::CircuitFrame: return "circuit-frame";
    case Theorem::Safety: return "safety";
    case Theorem::Soundness: return "soundness";
    case Theorem::Correctness: return "correctness";
    case Theorem::CompileExact: return "compile-exact";
    case Theorem::CompileCorrect: return "compile-correct";
  }
  return "?";
}

std::optional<Theorem> theorem_from_name(const std::string& name) {
  for (Theorem t : kAllTheorems)
    if (name == theorem_name(t)) return t;
  return std::nullopt;
}

std::string render_inputs(const Inputs& inputs) {
  std::ostringstream out;
  for (Domain d : {Domain::Public, Domain::Verifier, Domain::Prover}) {
    out << domain_name(d) << ": {";
    bool first = true;
    for (const auto& [k, v] : inputs.at(d)) {
      if (!first) out << ", ";
      first = false;
      out << k << " = " << to_string(v);
    }
    out << "}\n";
  }
  return std::move(out).str();
}

namespace {

constexpr std::uint64_t kPiSeed = 0x5eedf00dULL;
constexpr Domain kDomains[3] = {Domain::Public, Domain::Verifier,
                                Domain::Prover};

struct Prefix {
  std::vector<const LetExpr*> lets;  // outermost first
  const Expr* subject = nullptr;
};

Prefix split_prefix(const Expr& body) {
  Prefix p;
  const Expr* cur = &body;
  while (const auto* let = cur->as<LetExpr>()) {
    p.lets.push_back(let);
    cur = let->rest.get();
  }
  p.subject = cur;
  return p;
}

TypeBindings gamma_of(const Prefix& p) {
  TypeBindings g;  // innermost binding first, matching the env stack top
  for (auto it = p.lets.rbegin(); it != p.lets.rend(); ++it)
    g.emplace_back((*it)->var, *(*it)->bound->type);
  return g;
}

void append_streams(OutStreams& acc, const OutStreams& more) {
  for (const auto& v : more.prover) acc.prover.push_back(v);
  for (const auto& v : more.verifier) acc.verifier.push_back(v);
}

OutStreams concat_streams(const OutStreams& a, const OutStreams& b) {
  OutStreams out = a;
  append_streams(out, b);
  return out;
}

struct Ctx {
  const Program& p;
  const Inputs& in;
  const Nat& N;
  const Expr& body;
  QualType body_q;
  Prefix prefix;
  TypeBindings gamma;
  QualType subject_q;
  EffectSet subject_eff;

  explicit Ctx(const Program& prog, const Inputs& inputs, const Nat& modulus)
      : p(prog), in(inputs), N(modulus), body(*prog.main().body) {
    if (!body.type)
      throw std::logic_error("check_theorem on an untypechecked program");
    body_q = *body.type;
    prefix = split_prefix(body);
    gamma = gamma_of(prefix);
    subject_q = *prefix.subject->type;
    subject_eff = prefix.subject->effect;
  }

  std::optional<Counterexample> cex(Theorem t, const std::string& detail) const {
    return Counterexample{t, pretty_print(p), render_inputs(in), detail};
  }
};

struct LocalPrefix {
  Env env;
  OutStreams streams;
};

std::optional<LocalPrefix> eval_prefix_local(Domain d, const Ctx& ctx) {
  LocalPrefix out;
  for (const LetExpr* let : ctx.prefix.lets) {
    LocalResult r = eval_local(d, *let->bound, std::move(out.env), ctx.in, ctx.N);
    if (!r.ok) return std::nullopt;
    out.env = std::move(r.env);
    out.env.push(let->var, r.value);
    append_streams(out.streams, r.out);
  }
  return out;
}

// --- exactness (values, environments, and streams are exact per view) ---

std::optional<Counterexample> check_exactness(const Ctx& ctx) {
  for (Domain d : kDomains) {
    TypePred p = TypePred::in_domain(d);
    LocalResult whole = eval_local(d, ctx.body, Env{}, ctx.in, ctx.N);
    if (whole.ok) {
      if (!exact_in(ctx.body_q, whole.value, p, ctx.N))
        return ctx.cex(Theorem::Exactness,
                       std::string("whole-body value not exact in ") +
                           domain_name(d) + ": " + to_string(whole.value));
      if (whole.env.size() != 0)
        return ctx.cex(Theorem::Exactness, "whole-body run leaked bindings");
      if (!streams_exact_in(whole.out, d))
        return ctx.cex(Theorem::Exactness,
                       std::string("streams not exact in ") + domain_name(d));
    }
    auto pre = eval_prefix_local(d, ctx);
    if (!pre) continue;
    if (!env_exact_in(ctx.gamma, pre->env, p, ctx.N))
      return ctx.cex(Theorem::Exactness,
                     std::string("prefix environment not exact in ") +
                         domain_name(d));
    LocalResult r = eval_local(d, *ctx.prefix.subject, pre->env, ctx.in, ctx.N);
    if (!r.ok) continue;
    if (!exact_in(ctx.subject_q, r.value, p, ctx.N))
      return ctx.cex(Theorem::Exactness,
                     std::string("subject value not exact in ") +
                         domain_name(d) + ": " + to_string(r.value));
    if (!env_exact_in(ctx.gamma, r.env, p, ctx.N))
      return ctx.cex(Theorem::Exactness,
                     std::string("subject environment not exact in ") +
                         domain_name(d));
    if (!streams_exact_in(r.out, d))
      return ctx.cex(Theorem::Exactness,
                     std::string("subject streams not exact in ") +
                         domain_name(d));
  }
  return std::nullopt;
}

// --- frame (only effect domains change in the environment) ---

std::optional<Counterexample> check_frame(const Ctx& ctx) {
  for (Domain d : kDomains) {
    auto pre = eval_prefix_local(d, ctx);
    if (!pre) continue;
    LocalResult r = eval_local(d, *ctx.prefix.subject, pre->env, ctx.in, ctx.N);
    if (!r.ok) continue;
    for (Domain dd : kDomains) {
      if (!domain_le(dd, d)) continue;
      if (ctx.subject_eff.contains(dd)) continue;
      if (!env_coincident_in(ctx.gamma, pre->env, r.env,
                             TypePred::in_domain(dd), ctx.N))
        return ctx.cex(Theorem::Frame,
                       std::string("environment changed in ") +
                           domain_name(dd) + " (outside the effect set " +
                           ctx.subject_eff.to_string() + ") in the " +
                           domain_name(d) + " view");
    }
  }
  return std::nullopt;
}

// --- silence (no public effect means no circuit output) ---

std::optional<Counterexample> check_silence(const Ctx& ctx) {
  for (Domain d : kDomains) {
    if (!ctx.body.effect.contains(Domain::Public)) {
      LocalResult whole = eval_local(d, ctx.body, Env{}, ctx.in, ctx.N);
      if (whole.ok && !whole.out.empty())
        return ctx.cex(Theorem::Silence,
                       std::string("whole body wrote to a stream in the ") +
                           domain_name(d) + " view without a public effect");
    }
    if (ctx.subject_eff.contains(Domain::Public)) continue;
    auto pre = eval_prefix_local(d, ctx);
    if (!pre) continue;
    LocalResult r = eval_local(d, *ctx.prefix.subject, pre->env, ctx.in, ctx.N);
    if (r.ok && !r.out.empty())
      return ctx.cex(Theorem::Silence,
                     std::string("subject wrote to a stream in the ") +
                         domain_name(d) + " view without a public effect");
  }
  return std::nullopt;
}

// --- circuit frame (no public effect: circuit-visible bindings unchanged) ---

std::optional<Counterexample> check_circuit_frame(const Ctx& ctx) {
  if (ctx.subject_eff.contains(Domain::Public)) return std::nullopt;
  auto pre = eval_prefix_local(Domain::Prover, ctx);
  if (!pre) return std::nullopt;
  LocalResult r =
      eval_local(Domain::Prover, *ctx.prefix.subject, pre->env, ctx.in, ctx.N);
  if (!r.ok) return std::nullopt;
  if (!env_coincident_in(ctx.gamma, pre->env, r.env, TypePred::in_circuit(),
                         ctx.N))
    return ctx.cex(Theorem::CircuitFrame,
                   "circuit-visible environment entries changed without a "
                   "public effect");
  return std::nullopt;
}

// --- safety (inputs of strictly higher domains are irrelevant) ---

std::optional<Counterexample> check_safety(const Ctx& ctx) {
  std::vector<GetSite> sites = collect_get_sites(ctx.p);
  for (Domain d : {Domain::Public, Domain::Verifier}) {
    Inputs perturbed = ctx.in;
    std::mt19937_64 rng(0xbadc0ffeULL + static_cast<std::uint64_t>(d));
    for (const GetSite& site : sites) {
      if (domain_le(site.source, d)) continue;
      perturbed.at(site.source)[site.key] =
          random_core_value(rng, site.annotation, ctx.N, 4);
    }
    for (Domain dd : kDomains)
      if (!domain_le(dd, d))
        perturbed.at(dd).emplace("unused-junk", CoreValue{Nat(42)});
    LocalResult r1 = eval_local(d, ctx.body, Env{}, ctx.in, ctx.N);
    LocalResult r2 = eval_local(d, ctx.body, Env{}, perturbed, ctx.N);
    if (!equal_results(r1, r2))
      return ctx.cex(Theorem::Safety,
                     std::string("the ") + domain_name(d) +
                         " view changed when inputs of higher domains were "
                         "replaced");
  }
  return std::nullopt;
}

// --- soundness (runs in comparable domains agree on visible values) ---

std::optional<Counterexample> check_soundness(const Ctx& ctx) {
  constexpr std::pair<Domain, Domain> pairs[3] = {
      {Domain::Prover, Domain::Verifier},
      {Domain::Prover, Domain::Public},
      {Domain::Verifier, Domain::Public},
  };
  for (auto [hi, lo] : pairs) {
    TypePred p = TypePred::in_domain(lo);
    std::string tag = std::string(domain_name(hi)) + " vs " + domain_name(lo);
    LocalResult r_hi = eval_local(hi, ctx.body, Env{}, ctx.in, ctx.N);
    if (r_hi.ok) {
      LocalResult r_lo = eval_local(lo, ctx.body, Env{}, ctx.in, ctx.N);
      if (!r_lo.ok)
        return ctx.cex(Theorem::Soundness,
                       tag + ": lower view failed though higher succeeded (" +
                           r_lo.failure + ")");
      if (!coincident_in(ctx.body_q, r_hi.value, r_lo.value, p, ctx.N))
        return ctx.cex(Theorem::Soundness,
                       tag + ": results disagree on visible values: " +
                           to_string(r_hi.value) + " vs " +
                           to_string(r_lo.value));
      if (!streams_coincident_in(r_hi.out, r_lo.out, lo))
        return ctx.cex(Theorem::Soundness, tag + ": streams disagree");
    }
    auto pre_hi = eval_prefix_local(hi, ctx);
    if (!pre_hi) continue;
    auto pre_lo = eval_prefix_local(lo, ctx);
    if (!pre_lo)
      return ctx.cex(Theorem::Soundness,
                     tag + ": prefix failed in the lower view only");
    if (!env_coincident_in(ctx.gamma, pre_hi->env, pre_lo->env, p, ctx.N))
      return ctx.cex(Theorem::Soundness, tag + ": prefix environments disagree");
    LocalResult s_hi =
        eval_local(hi, *ctx.prefix.subject, pre_hi->env, ctx.in, ctx.N);
    if (!s_hi.ok) continue;
    LocalResult s_lo =
        eval_local(lo, *ctx.prefix.subject, pre_lo->env, ctx.in, ctx.N);
    if (!s_lo.ok)
      return ctx.cex(Theorem::Soundness,
                     tag + ": lower subject run failed though higher succeeded");
    if (!coincident_in(ctx.subject_q, s_hi.value, s_lo.value, p, ctx.N))
      return ctx.cex(Theorem::Soundness, tag + ": subject values disagree");
    if (!env_coincident_in(ctx.gamma, s_hi.env, s_lo.env, p, ctx.N))
      return ctx.cex(Theorem::Soundness, tag + ": subject environments disagree");
    if (!streams_coincident_in(s_hi.out, s_lo.out, lo))
      return ctx.cex(Theorem::Soundness, tag + ": subject streams disagree");
  }
  return std::nullopt;
}

// --- correctness (a successful prover run replays in the circuit) ---

OutStreams make_rho() {
  OutStreams rho;
  rho.prover.push_back(known_nat(Nat(5)));
  rho.prover.push_back(known_nat(Nat(7)));
  rho.verifier.push_back(known_nat(Nat(3)));
  rho.verifier.push_back(known_nat(Nat(9)));
  return rho;
}

std::optional<Counterexample> check_correctness(const Ctx& ctx) {
  LocalResult r_p = eval_local(Domain::Prover, ctx.body, Env{}, ctx.in, ctx.N);
  if (!r_p.ok) return std::nullopt;
  OutStreams rho = make_rho();
  TypePred circ = TypePred::in_circuit();

  CircuitResult c = eval_circuit(ctx.body, Env{}, ctx.in,
                                 concat_streams(r_p.out, rho), ctx.N);
  if (!c.ok())
    return ctx.cex(Theorem::Correctness,
                   "circuit semantics failed on the prover's streams: " +
                       c.failure);
  if (!equal_streams(c.remaining, rho))
    return ctx.cex(Theorem::Correctness,
                   "circuit semantics did not consume exactly the prover's "
                   "streams");
  if (!exact_in(ctx.body_q, c.value, circ, ctx.N))
    return ctx.cex(Theorem::Correctness, "circuit value not exact in circuit");
  if (!coincident_in(ctx.body_q, r_p.value, c.value, circ, ctx.N))
    return ctx.cex(Theorem::Correctness,
                   "prover and circuit values disagree: " +
                       to_string(r_p.value) + " vs " + to_string(c.value));

  // Subject-level replay through the prefix.
  auto pre_p = eval_prefix_local(Domain::Prover, ctx);
  if (!pre_p) return std::nullopt;
  LocalResult s_p =
      eval_local(Domain::Prover, *ctx.prefix.subject, pre_p->env, ctx.in, ctx.N);
  if (!s_p.ok) return std::nullopt;

  Env cenv;
  OutStreams streams = concat_streams(r_p.out, rho);
  for (const LetExpr* let : ctx.prefix.lets) {
    CircuitResult cr = eval_circuit(*let->bound, std::move(cenv), ctx.in,
                                    std::move(streams), ctx.N);
    if (!cr.ok())
      return ctx.cex(Theorem::Correctness,
                     "circuit replay of a prefix binding failed: " + cr.failure);
    cenv = std::move(cr.env);
    cenv.push(let->var, cr.value);
    streams = std::move(cr.remaining);
  }
  if (!equal_streams(streams, concat_streams(s_p.out, rho)))
    return ctx.cex(Theorem::Correctness,
                   "prefix did not consume exactly its own stream outputs");
  if (!env_exact_in(ctx.gamma, cenv, circ, ctx.N))
    return ctx.cex(Theorem::Correctness,
                   "prefix circuit environment not exact in circuit");
  if (!env_coincident_in(ctx.gamma, pre_p->env, cenv, circ, ctx.N))
    return ctx.cex(Theorem::Correctness,
                   "prefix environments disagree between prover and circuit");

  CircuitResult cs =
      eval_circuit(*ctx.prefix.subject, cenv, ctx.in, streams, ctx.N);
  if (!cs.ok())
    return ctx.cex(Theorem::Correctness,
                   "subject circuit run failed: " + cs.failure);
  if (!equal_streams(cs.remaining, rho))
    return ctx.cex(Theorem::Correctness,
                   "subject did not consume exactly its own stream outputs");
  if (!exact_in(ctx.subject_q, cs.value, circ, ctx.N))
    return ctx.cex(Theorem::Correctness,
                   "subject circuit value not exact in circuit");
  if (!coincident_in(ctx.subject_q, s_p.value, cs.value, circ, ctx.N))
    return ctx.cex(Theorem::Correctness,
                   "subject prover and circuit values disagree");
  if (!env_exact_in(ctx.gamma, cs.env, circ, ctx.N))
    return ctx.cex(Theorem::Correctness,
                   "final circuit environment not exact in circuit");
  if (!env_coincident_in(ctx.gamma, s_p.env, cs.env, circ, ctx.N))
    return ctx.cex(Theorem::Correctness,
                   "final environments disagree between prover and circuit");
  return std::nullopt;
}

// --- staged compilation shared by the two compile theorems ---

struct StagedCompile {
  bool failed = false;
  std::string fail_reason;
  CompileState st;
  CompositeEnv env_before_subject;
  std::uint32_t nu_pre[2] = {0, 0};
  std::size_t outputs_pre = 0;
  CompositeValue subject_cv;
  Circuit circuit;

  explicit StagedCompile(const Inputs& in, const Nat& N) : st(in, N) {}
};

StagedCompile run_staged_compile(const Ctx& ctx) {
  StagedCompile out(ctx.in, ctx.N);
  try {
    for (const LetExpr* let : ctx.prefix.lets) {
      CompositeValue cv = compile_expr(*let->bound, out.st);
      out.st.env().push(let->var, std::move(cv));
    }
    out.env_before_subject = out.st.env();
    out.nu_pre[0] = out.st.input_counter(Domain::Prover);
    out.nu_pre[1] = out.st.input_counter(Domain::Verifier);
    out.outputs_pre = out.st.output_count();
    out.subject_cv = compile_expr(*ctx.prefix.subject, out.st);
  } catch (const EvalFailure& f) {
    out.failed = true;
    out.fail_reason = f.reason;
    return out;
  }
  out.circuit = out.st.finish();
  return out;
}

// --- compile-exact (compilation succeeds and produces exact composites) ---

std::optional<Counterexample> check_compile_exact(const Ctx& ctx) {
  StagedCompile sc = run_staged_compile(ctx);
  if (sc.failed) {
    // Compilation performs the public view's local computation, so it may
    // fail only where that computation fails.
    LocalResult pub = eval_local(Domain::Public, ctx.body, Env{}, ctx.in, ctx.N);
    if (pub.ok)
      return ctx.cex(Theorem::CompileExact,
                     "compilation failed (" + sc.fail_reason +
                         ") though the public view succeeds");
    return std::nullopt;
  }
  if (!composite_exact(ctx.subject_q, sc.subject_cv, sc.circuit, kPiSeed))
    return ctx.cex(Theorem::CompileExact, "compiled value not exact");
  if (!env_composite_exact(ctx.gamma, sc.env_before_subject, sc.circuit,
                           kPiSeed + 1))
    return ctx.cex(Theorem::CompileExact,
                   "compiled prefix environment not exact");
  if (!env_composite_exact(ctx.gamma, sc.st.env(), sc.circuit, kPiSeed + 2))
    return ctx.cex(Theorem::CompileExact,
                   "compiled final environment not exact");
  return std::nullopt;
}

// --- compile-correct (circuit-semantics success coincides with acceptance) ---

std::optional<Counterexample> check_compile_correct(const Ctx& ctx) {
  LocalResult r_p = eval_local(Domain::Prover, ctx.body, Env{}, ctx.in, ctx.N);
  if (!r_p.ok) return std::nullopt;

  StagedCompile sc = run_staged_compile(ctx);
  if (sc.failed)
    return ctx.cex(Theorem::CompileCorrect,
                   "compilation failed (" + sc.fail_reason +
                       ") though the prover view succeeds");
  const Circuit& circuit = sc.circuit;
  InputAssignment pi = streams_to_assignment(r_p.out);
  if (pi.prover.size() != circuit.input_count[0] ||
      pi.verifier.size() != circuit.input_count[1])
    return ctx.cex(Theorem::CompileCorrect,
                   "stream lengths disagree with input-node counts");

  // Whole body, honest streams.
  CircuitResult c = eval_circuit(ctx.body, Env{}, ctx.in, r_p.out, ctx.N);
  bool acc = accepts(circuit, pi);
  if (c.ok() != acc)
    return ctx.cex(Theorem::CompileCorrect,
                   std::string("circuit semantics ") +
                       (c.ok() ? "succeeded" : "failed") +
                       " but the circuit " + (acc ? "accepts" : "rejects"));
  if (c.ok()) {
    if (!counters_bullet_sim(circuit.input_count[0], circuit.input_count[1],
                             pi, c.remaining))
      return ctx.cex(Theorem::CompileCorrect,
                     "leftover streams disagree with leftover inputs");
    Stage s = ctx.body_q.stage_or_pre();
    if ((ctx.body_q.domain == Domain::Public || s == Stage::Post) &&
        !sim(bullet(sc.subject_cv, circuit, pi), c.value))
      return ctx.cex(Theorem::CompileCorrect,
                     "compiled value and circuit-semantics value differ");
  }

  // Whole body, tampered streams: increment one numeric entry.
  std::mt19937_64 rng(kPiSeed + 17);
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::vector<std::pair<Domain, std::size_t>> numeric;
    for (Domain d : {Domain::Prover, Domain::Verifier})
      for (std::size_t i = 0; i < r_p.out.at(d).size(); ++i)
        if (r_p.out.at(d)[i].is_known() && r_p.out.at(d)[i].get().is_nat())
          numeric.emplace_back(d, i);
    if (numeric.empty()) break;
    auto [d, i] = numeric[rng() % numeric.size()];
    OutStreams tampered = r_p.out;
    InputAssignment pi2 = pi;
    Nat bumped = (tampered.at(d)[i].get().nat() + 1) % ctx.N;
    tampered.at(d)[i] = known_nat(bumped);
    std::size_t flat = i;
    pi2.at(d)[flat] = bumped;
    CircuitResult c2 = eval_circuit(ctx.body, Env{}, ctx.in, tampered, ctx.N);
    bool acc2 = accepts(circuit, pi2);
    if (c2.status == CircuitResult::Status::StreamUnderflow)
      return ctx.cex(Theorem::CompileCorrect,
                     "stream underflow on tampered streams");
    if (c2.ok() != acc2)
      return ctx.cex(Theorem::CompileCorrect,
                     std::string("tampered run: circuit semantics ") +
                         (c2.ok() ? "succeeded" : "failed") +
                         " but the circuit " + (acc2 ? "accepts" : "rejects"));
  }

  // Subject level: replay the prefix, then relate the subject's run to its
  // own output nodes.
  Env cenv;
  OutStreams streams = r_p.out;
  for (const LetExpr* let : ctx.prefix.lets) {
    CircuitResult cr = eval_circuit(*let->bound, std::move(cenv), ctx.in,
                                    std::move(streams), ctx.N);
    if (!cr.ok())
      return ctx.cex(Theorem::CompileCorrect,
                     "circuit replay of a prefix binding failed");
    cenv = std::move(cr.env);
    cenv.push(let->var, cr.value);
    streams = std::move(cr.remaining);
  }
  if (!env_bullet_sim(sc.env_before_subject, circuit, pi, cenv))
    return ctx.cex(Theorem::CompileCorrect,
                   "prefix compile environment (under pi) and circuit "
                   "environment differ");
  if (!counters_bullet_sim(sc.nu_pre[0], sc.nu_pre[1], pi, streams))
    return ctx.cex(Theorem::CompileCorrect,
                   "prefix input counters disagree with remaining streams");

  CircuitResult cs =
      eval_circuit(*ctx.prefix.subject, cenv, ctx.in, streams, ctx.N);
  bool acc_subject = true;
  for (std::size_t i = sc.outputs_pre; i < circuit.outputs.size(); ++i)
    acc_subject =
        acc_subject && eval_with_input(circuit.outputs[i], circuit, pi) == 0;
  if (cs.ok() != acc_subject)
    return ctx.cex(Theorem::CompileCorrect,
                   std::string("subject: circuit semantics ") +
                       (cs.ok() ? "succeeded" : "failed") +
                       " but its outputs " +
                       (acc_subject ? "accept" : "reject"));
  if (cs.ok()) {
    if (!env_bullet_sim(sc.st.env(), circuit, pi, cs.env))
      return ctx.cex(Theorem::CompileCorrect,
                     "final compile environment (under pi) and circuit "
                     "environment differ");
    if (!counters_bullet_sim(sc.st.input_counter(Domain::Prover),
                             sc.st.input_counter(Domain::Verifier), pi,
                             cs.remaining))
      return ctx.cex(Theorem::CompileCorrect,
                     "final input counters disagree with remaining streams");
    Stage s = ctx.subject_q.stage_or_pre();
    if ((ctx.subject_q.domain == Domain::Public || s == Stage::Post) &&
        !sim(bullet(sc.subject_cv, circuit, pi), cs.value))
      return ctx.cex(Theorem::CompileCorrect,
                     "subject compiled value and circuit value differ");
  }
  return std::nullopt;
}

}  // namespace

std::optional<Counterexample> check_theorem(Theorem t, const Program& p,
                                            const Inputs& inputs,
                                            const Nat& modulus) {
  Ctx ctx(p, inputs, modulus);
  switch (t) {
    case Theorem::Exactness: return check_exactness(ctx);
    case Theorem::Frame: return check_frame(ctx);
    case Theorem::Silence: return check_silence(ctx);
    case Theorem::CircuitFrame: return check_circuit_frame(ctx);
    case Theorem::Safety: return check_safety(ctx);
    case Theorem::Soundness: return check_soundness(ctx);
    case Theorem::Correctness: return check_correctness(ctx);
    case Theorem::CompileExact: return check_compile_exact(ctx);
    case Theorem::CompileCorrect: return check_compile_correct(ctx);
  }
  return std::nullopt;
}

}  // namespace zksc::conf
