#include "situskit/dividing.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace situskit {

namespace {

std::string render_sequence(const FinStructure& M, const Tuple& seq) {
  std::ostringstream os;
  for (std::size_t i = 0; i < seq.size(); ++i)
    os << (i ? "," : "") << M.universe[static_cast<std::size_t>(seq[i])];
  return os.str();
}

template <typename Fn>
bool for_each_sequence(int universe, int len, Fn&& fn) {
  Tuple seq(static_cast<std::size_t>(len), 0);
  while (true) {
    if (!fn(seq)) return false;
    int i = len - 1;
    for (; i >= 0; --i) {
      if (++seq[static_cast<std::size_t>(i)] < universe) break;
      seq[static_cast<std::size_t>(i)] = 0;
    }
    if (i < 0) return true;
  }
}

int distinct_count(const Tuple& t) {
  std::set<int> s(t.begin(), t.end());
  return static_cast<int>(s.size());
}

void echo_config(Verdict& v, const FinStructure& M, const CheckConfig& cfg) {
  v.config["depth"] = std::to_string(cfg.depth);
  v.config["chain"] = std::to_string(cfg.chain_for(M));
  v.config["distinct"] = std::to_string(cfg.distinct_for(M));
  v.config["qdepth"] = std::to_string(cfg.qdepth);
  v.config["kernel_literals"] = std::to_string(cfg.kernel_literals);
  v.config["variant"] = cfg.variant == StoneVariant::Extendable ? "extendable"
                        : cfg.variant == StoneVariant::Plain    ? "plain"
                                                                : "consecutive";
}

// identity-on-vertices inclusion between corepresented objects sharing atoms
SitusMorphism inclusion_morphism(const TruncatedSitus& A,
                                 const TruncatedSitus& B) {
  SitusMorphism h;
  int d = std::min(A.depth, B.depth);
  for (int n = 1; n <= d; ++n) {
    SetMap m(static_cast<int>(A.level(n).size()),
             static_cast<int>(B.level(n).size()));
    for (std::size_t e = 0; e < A.level(n).size(); ++e)
      m.tab[e] = B.level(n).at(A.level(n).elems[e]);
    h.level_maps.push_back(std::move(m));
  }
  return h;
}

SitusMorphism vertex_induced(const TruncatedSitus& A, const TruncatedSitus& B,
                             const std::vector<int>& v) {
  SitusMorphism h;
  int d = std::min(A.depth, B.depth);
  for (int n = 1; n <= d; ++n) {
    SetMap m(static_cast<int>(A.level(n).size()),
             static_cast<int>(B.level(n).size()));
    for (std::size_t e = 0; e < A.level(n).size(); ++e) {
      Tuple t;
      for (int a : A.level(n).elems[e])
        t.push_back(v[static_cast<std::size_t>(a)]);
      m.tab[e] = B.level(n).at(t);
    }
    h.level_maps.push_back(std::move(m));
  }
  return h;
}

}  // namespace

std::vector<TruthTable> base_cutoff(const FinStructure& M,
                                    const CheckConfig& cfg) {
  auto out = cutoff_formulas(M, 1, cfg.cutoff());
  auto bin = cutoff_formulas(M, 2, cfg.cutoff());
  out.insert(out.end(), bin.begin(), bin.end());
  return out;
}

std::vector<TruthTable> parameter_cutoff(const FinStructure& M,
                                         const CheckConfig& cfg) {
  auto out = bind_parameters(M, cutoff_formulas(M, 2, cfg.cutoff()));
  CutoffOptions qf = cfg.cutoff();
  qf.qdepth = 0;
  auto tern = bind_parameters(M, cutoff_formulas(M, 3, qf));
  out.insert(out.end(), tern.begin(), tern.end());
  return out;
}

Verdict stability(const FinStructure& M, const TruthTable& phi,
                  const CheckConfig& cfg) {
  Verdict v;
  v.property = "stability";
  echo_config(v, M, cfg);
  const int L = cfg.chain_for(M);
  const int N = cfg.distinct_for(M);
  // oracle: every phi-indiscernible-with-repetitions sequence with at least N
  // distinct elements is order phi-indiscernible with repetitions
  v.oracle_holds = for_each_sequence(M.size(), L, [&](const Tuple& seq) {
    if (distinct_count(seq) < N) return true;
    if (!is_indiscernible(M, phi, seq, IndiscKind::WithRepetitions)) return true;
    if (is_indiscernible(M, phi, seq, IndiscKind::OrderWithRepetitions))
      return true;
    v.witness["sequence"] = render_sequence(M, seq);
    return false;
  });
  // lifting: I^<= -> |I| against M^{phi} -> T
  TruncatedSitus A = order_object(FinPreorder::chain(L), OrderFlavor::Ordered,
                                  OrderFilterKind::Antidiscrete, cfg.depth);
  TruncatedSitus B = order_object(FinPreorder::chain(L), OrderFlavor::SetFlavor,
                                  OrderFilterKind::Antidiscrete, cfg.depth);
  TruncatedSitus X = stone_space(M, {phi}, cfg.variant, N, cfg.depth);
  TruncatedSitus Y = terminal_situs(cfg.depth);
  LiftingInstance inst;
  inst.A = &A;
  inst.B = &B;
  inst.X = &X;
  inst.Y = &Y;
  inst.i = inclusion_morphism(A, B);
  inst.p = hom_set(X, Y).front();
  LiftReport rep = lifting_property(inst);
  v.holds = rep.holds;
  if (!rep.holds && rep.witness_f) {
    Tuple seq;
    for (int x : rep.witness_f->level(1).tab)
      seq.push_back(X.level(1).elems[static_cast<std::size_t>(x)][0]);
    v.witness["square_bottom"] = render_sequence(M, seq);
  }
  return v;
}

Verdict eventual_stability(const FinStructure& M, const TruthTable& phi,
                           const CheckConfig& cfg) {
  Verdict v;
  v.property = "eventual-stability";
  echo_config(v, M, cfg);
  const int L = cfg.chain_for(M);
  const int N = cfg.distinct_for(M);
  auto eventually = [&](const Tuple& seq, IndiscKind kind) {
    for (std::size_t s = 0; s < seq.size(); ++s) {
      Tuple tail(seq.begin() + static_cast<std::ptrdiff_t>(s), seq.end());
      if (is_indiscernible(M, phi, tail, kind)) return true;
    }
    return false;
  };
  v.oracle_holds = for_each_sequence(M.size(), L, [&](const Tuple& seq) {
    if (!eventually(seq, IndiscKind::WithRepetitions)) return true;
    if (eventually(seq, IndiscKind::OrderWithRepetitions)) return true;
    v.witness["sequence"] = render_sequence(M, seq);
    return false;
  });
  TruncatedSitus A = order_object(FinPreorder::chain(L), OrderFlavor::Ordered,
                                  OrderFilterKind::Tails, cfg.depth);
  TruncatedSitus B = order_object(FinPreorder::chain(L), OrderFlavor::SetFlavor,
                                  OrderFilterKind::Tails, cfg.depth);
  TruncatedSitus X = stone_space(M, {phi}, cfg.variant, N, cfg.depth);
  TruncatedSitus Y = terminal_situs(cfg.depth);
  LiftingInstance inst;
  inst.A = &A;
  inst.B = &B;
  inst.X = &X;
  inst.Y = &Y;
  inst.i = inclusion_morphism(A, B);
  inst.p = hom_set(X, Y).front();
  LiftReport rep = lifting_property(inst);
  v.holds = rep.holds;
  if (!rep.holds && rep.witness_f) {
    Tuple seq;
    for (int x : rep.witness_f->level(1).tab)
      seq.push_back(X.level(1).elems[static_cast<std::size_t>(x)][0]);
    v.witness["square_bottom"] = render_sequence(M, seq);
  }
  return v;
}

Verdict nip(const FinStructure& M, const CheckConfig& cfg) {
  Verdict v;
  v.property = "nip";
  echo_config(v, M, cfg);
  const int L = cfg.chain_for(M);
  const int N = cfg.distinct_for(M);
  auto sigma0 = base_cutoff(M, cfg);
  auto sigmap = parameter_cutoff(M, cfg);

  auto eventually_all = [&](const Tuple& seq,
                            const std::vector<TruthTable>& fam,
                            IndiscKind kind) {
    for (std::size_t s = 0; s < seq.size(); ++s) {
      Tuple tail(seq.begin() + static_cast<std::ptrdiff_t>(s), seq.end());
      bool all = true;
      for (const auto& phi : fam)
        if (!is_indiscernible(M, phi, tail, kind)) {
          all = false;
          break;
        }
      if (all) return true;
    }
    return false;
  };
  auto eventually_one = [&](const Tuple& seq, const TruthTable& phi,
                            IndiscKind kind) {
    for (std::size_t s = 0; s < seq.size(); ++s) {
      Tuple tail(seq.begin() + static_cast<std::ptrdiff_t>(s), seq.end());
      if (is_indiscernible(M, phi, tail, kind)) return true;
    }
    return false;
  };

  // oracle: eventually indiscernible (over the empty set) implies eventually
  // phi(-,b)-indiscernible for each parameter formula
  bool oracle = for_each_sequence(M.size(), L, [&](const Tuple& seq) {
    if (!eventually_all(seq, sigma0, IndiscKind::WithRepetitions)) return true;
    for (const auto& psi : sigmap)
      if (!eventually_one(seq, psi, IndiscKind::WithRepetitions)) {
        v.witness["oracle_sequence"] = render_sequence(M, seq);
        v.witness["oracle_formula"] = psi.label;
        return false;
      }
    return true;
  });
  v.oracle_holds = oracle;

  // almost-lifting (injective bottom arrows): tails-continuity into the
  // parameter-free space forces tails-continuity into the L(M) space
  {
    TruncatedSitus B = order_object(FinPreorder::chain(L), OrderFlavor::Ordered,
                                    OrderFilterKind::Tails, cfg.depth);
    TruncatedSitus Mb = stone_space(M, sigma0, cfg.variant, N, cfg.depth);
    auto sigLM = sigma0;
    sigLM.insert(sigLM.end(), sigmap.begin(), sigmap.end());
    TruncatedSitus MbL = stone_space(M, sigLM, cfg.variant, N, cfg.depth);
    bool almost = true;
    if (L <= M.size()) {
      almost = for_each_sequence(M.size(), L, [&](const Tuple& seq) {
        if (distinct_count(seq) != L) return true;  // injective only
        std::vector<int> vmap(seq.begin(), seq.end());
        SitusMorphism bottom = vertex_induced(B, Mb, vmap);
        if (!morphism_continuous(B, Mb, bottom)) return true;
        SitusMorphism diag = vertex_induced(B, MbL, vmap);
        if (morphism_continuous(B, MbL, diag)) return true;
        v.witness["almost_sequence"] = render_sequence(M, seq);
        return false;
      });
    }
    v.parts["almost_injective"] = almost;
  }

  // exact lifting with consecutive-repetition spaces:
  //   ⊥ -> I^{<=tails}  ⋔  M'^{L(M)} -> M'
  {
    TruncatedSitus A = initial_situs(cfg.depth);
    TruncatedSitus B = order_object(FinPreorder::chain(L), OrderFlavor::Ordered,
                                    OrderFilterKind::Tails, cfg.depth);
    auto sigLM = sigma0;
    sigLM.insert(sigLM.end(), sigmap.begin(), sigmap.end());
    TruncatedSitus X =
        stone_space(M, sigLM, StoneVariant::Consecutive, N, cfg.depth);
    TruncatedSitus Y =
        stone_space(M, sigma0, StoneVariant::Consecutive, N, cfg.depth);
    LiftingInstance inst;
    inst.A = &A;
    inst.B = &B;
    inst.X = &X;
    inst.Y = &Y;
    inst.i = hom_set(A, B).front();
    inst.p = inclusion_morphism(X, Y);
    LiftReport rep = lifting_property(inst);
    v.parts["exact_lifting"] = rep.holds;
    v.holds = rep.holds;
    if (!rep.holds && rep.witness_g) {
      Tuple seq;
      for (int x : rep.witness_g->level(1).tab)
        seq.push_back(Y.level(1).elems[static_cast<std::size_t>(x)][0]);
      v.witness["exact_sequence"] = render_sequence(M, seq);
    }
  }
  return v;
}

Verdict op_nsop(const FinStructure& M, int k, const CheckConfig& cfg) {
  Verdict v;
  v.property = "op";
  echo_config(v, M, cfg);
  v.config["k"] = std::to_string(k);
  const int N = cfg.distinct_for(M);

  // Oracle: a formula phi ordering a sequence of k pairwise-distinct elements
  // as phi(a_i,a_j) <=> i<j, with at least one element left outside the
  // sequence (the finite stand-in for the star point).  The search family is
  // the binary cutoff plus rectangles l1(x) & l2(y) of unary cutoff literals,
  // which is how definable partitions order elements.
  std::vector<TruthTable> order_family = cutoff_formulas(M, 2, cfg.cutoff());
  {
    auto unary = cutoff_formulas(M, 1, cfg.cutoff());
    for (const auto& p : unary)
      for (const auto& q : unary) {
        TruthTable t;
        t.arity = 2;
        t.universe = M.size();
        t.label = "(" + p.label + "(x) & " + q.label + "(y))";
        t.vals.resize(static_cast<std::size_t>(M.size()) *
                      static_cast<std::size_t>(M.size()));
        for (int x = 0; x < M.size(); ++x)
          for (int y = 0; y < M.size(); ++y)
            t.vals[static_cast<std::size_t>(x * M.size() + y)] =
                (p.at({x}) && q.at({y})) ? 1 : 0;
        order_family.push_back(std::move(t));
      }
  }
  bool found = false;
  if (k < M.size()) {
    std::vector<int> pick;
    std::function<bool()> rec = [&]() -> bool {
      if (static_cast<int>(pick.size()) == k) {
        for (const auto& phi : order_family) {
          bool ok = true;
          for (int i = 0; i < k && ok; ++i)
            for (int j = 0; j < k && ok; ++j) {
              bool val = phi.at({pick[static_cast<std::size_t>(i)],
                                 pick[static_cast<std::size_t>(j)]});
              if (val != (i < j)) ok = false;
            }
          if (ok) {
            std::ostringstream os;
            os << phi.label << " on (";
            for (int i = 0; i < k; ++i)
              os << (i ? "," : "")
                 << M.universe[static_cast<std::size_t>(
                        pick[static_cast<std::size_t>(i)])];
            os << ")";
            v.witness["op_witness"] = os.str();
            return true;
          }
        }
        return false;
      }
      for (int e = 0; e < M.size(); ++e) {
        if (std::find(pick.begin(), pick.end(), e) != pick.end()) continue;
        pick.push_back(e);
        if (rec()) return true;
        pick.pop_back();
      }
      return false;
    };
    found = rec();
  }
  v.oracle_holds = found;

  auto sigma = base_cutoff(M, cfg);
  TruncatedSitus Mb = stone_space(M, sigma, cfg.variant, N, cfg.depth);

  // lifting: a continuous surjection onto the star order
  TruncatedSitus star = star_order(k, cfg.depth);
  auto surj = exists_surjection(Mb, star);
  v.holds = surj.has_value();
  if (surj) {
    std::ostringstream os;
    for (std::size_t e = 0; e < surj->level(1).tab.size(); ++e)
      os << (e ? "," : "") << surj->level(1).tab[e];
    v.witness["surjection"] = os.str();
  }

  // boundedness: every continuous map to star(k) (resp. the NSOP chain
  // object) has fewer than k non-star values (resp. image values), i.e.
  // factors through a smaller object up to monotone reindexing
  {
    bool bounded = true;
    for (const auto& g : hom_set(Mb, star)) {
      std::set<int> nonstar;
      for (int y : g.level(1).tab)
        if (y != 0) nonstar.insert(y);
      if (static_cast<int>(nonstar.size()) >= k) bounded = false;
    }
    v.parts["op_bounded"] = bounded;
  }

  // NSOP (ii): a linear preorder on |M| with at least k classes making the
  // identity continuous into the both-directions-monotone object
  {
    bool foundii = false;
    std::vector<int> block(static_cast<std::size_t>(M.size()), -1);
    std::function<bool(int, int)> rec = [&](int idx, int nblocks) -> bool {
      if (idx == M.size()) {
        if (nblocks < k) return false;
        // generator: tuples splitting into one monotone piece wrt block ranks
        TruncatedSitus obj =
            corepresented_by_preorder(FinPreorder::set(M.size()), cfg.depth);
        for (int n = 1; n <= cfg.depth; ++n) {
          const Carrier& car = obj.level(n);
          IndexSet g(car.size());
          for (std::size_t e = 0; e < car.size(); ++e) {
            Tuple r;
            for (int x : car.elems[e])
              r.push_back(block[static_cast<std::size_t>(x)]);
            if (std::is_sorted(r.begin(), r.end()) ||
                std::is_sorted(r.rbegin(), r.rend()))
              g.insert(e);
          }
          obj.filter(n) = make_filter(static_cast<int>(car.size()), {g});
        }
        SitusMorphism id;
        for (int n = 1; n <= cfg.depth; ++n)
          id.level_maps.push_back(
              SetMap::identity(static_cast<int>(Mb.level(n).size())));
        return morphism_continuous(Mb, obj, id);
      }
      for (int b = 0; b <= nblocks; ++b) {
        block[static_cast<std::size_t>(idx)] = b;
        if (rec(idx + 1, std::max(nblocks, b + 1))) return true;
      }
      block[static_cast<std::size_t>(idx)] = -1;
      return false;
    };
    foundii = rec(0, 0);
    v.parts["nsop_preorder_found"] = foundii;
  }

  // NSOP (ii'): a continuous surjection onto the k-chain ⋚ object
  {
    TruncatedSitus chainobj =
        monotone_pieces_order(FinPreorder::chain(k), 1, cfg.depth);
    v.parts["nsop_surjection_found"] =
        exists_surjection(Mb, chainobj).has_value();
    bool bounded = true;
    for (const auto& g : hom_set(Mb, chainobj)) {
      std::set<int> image(g.level(1).tab.begin(), g.level(1).tab.end());
      if (static_cast<int>(image.size()) >= k) bounded = false;
    }
    v.parts["nsop_bounded"] = bounded;
  }
  return v;
}

Verdict non_dividing(const FinStructure& M, const std::vector<int>& A, int a,
                     int b, const CheckConfig& cfg) {
  Verdict v;
  v.property = "non-dividing";
  echo_config(v, M, cfg);
  const int L = cfg.chain > 0 ? cfg.chain : std::min(3, M.size());
  v.config["chain"] = std::to_string(L);
  const int N = cfg.distinct_for(M);

  auto bin = cutoff_formulas(M, 2, cfg.cutoff());
  CutoffOptions qf0 = cfg.cutoff();
  qf0.qdepth = 0;
  auto tern = cutoff_formulas(M, 3, qf0);
  auto with_params = [&](const std::vector<int>& params) {
    auto fam = base_cutoff(M, cfg);
    for (int p : params) {
      for (const auto& t : bin) fam.push_back(slice_last(t, p));
      for (const auto& t : tern) fam.push_back(slice_last(t, p));
    }
    return fam;
  };

  auto indisc_for = [&](const Tuple& seq, const std::vector<TruthTable>& fam) {
    for (const auto& phi : fam)
      if (!is_indiscernible(M, phi, seq, IndiscKind::WithRepetitions))
        return false;
    return true;
  };

  // oracle: item (2)
  auto famA = with_params(A);
  auto orbitsAb = [&] {
    std::vector<int> Ab = A;
    Ab.push_back(b);
    return type_orbits(M, Ab, 1);
  }();
  bool oracle = for_each_sequence(M.size(), L, [&](const Tuple& seq) {
    if (seq[0] != b) return true;
    if (!indisc_for(seq, famA)) return true;
    for (int ap = 0; ap < M.size(); ++ap) {
      if (orbitsAb[static_cast<std::size_t>(ap)] !=
          orbitsAb[static_cast<std::size_t>(a)])
        continue;
      std::vector<int> Aap = A;
      Aap.push_back(ap);
      if (indisc_for(seq, with_params(Aap))) return true;
    }
    v.witness["oracle_sequence"] = render_sequence(M, seq);
    return false;
  });
  v.oracle_holds = oracle;

  // lifting: {1} -> I^<=  against  M[+inf]/A -> M/A with the fixed top arrow
  // tp(a/Ab) = class of (b,..,b,a)
  auto sigma0 = base_cutoff(M, cfg);
  auto sigmap = [&] {
    auto out = cutoff_formulas(M, 2, cfg.cutoff());
    CutoffOptions qf = cfg.cutoff();
    qf.qdepth = 0;
    auto tern = cutoff_formulas(M, 3, qf);
    out.insert(out.end(), tern.begin(), tern.end());
    return out;
  }();
  TruncatedSitus Xfull = stone_space(M, sigma0, cfg.variant, N, cfg.depth);
  TruncatedSitus Sfull =
      shifted_structure_extendable(M, sigma0, sigmap, N, cfg.depth);
  LevelEquivalence E, Es;
  for (int n = 1; n <= cfg.depth; ++n) {
    E.classes.push_back(type_orbits(M, A, n));
    Es.classes.push_back(type_orbits(M, A, n + 1));
  }
  TruncatedSitus Q = quotient(Xfull, E);
  TruncatedSitus Qs = quotient(Sfull, Es);
  SitusMorphism prX = quotient_projection(Xfull, Q, E);
  SitusMorphism prS = quotient_projection(Sfull, Qs, Es);
  // p : Qs -> Q via representatives
  SitusMorphism p;
  for (int n = 1; n <= cfg.depth; ++n) {
    SetMap m(static_cast<int>(Qs.level(n).size()),
             static_cast<int>(Q.level(n).size()));
    for (std::size_t e = 0; e < Qs.level(n).size(); ++e) {
      const Tuple& rep = Qs.level(n).elems[e];
      Tuple head(rep.begin(), rep.end() - 1);
      m.tab[e] = prX.level(n)(Xfull.level(n).at(head));
    }
    p.level_maps.push_back(std::move(m));
  }
  TruncatedSitus One = corepresented_by_preorder(FinPreorder::set(1), cfg.depth);
  TruncatedSitus B = order_object(FinPreorder::chain(L), OrderFlavor::Ordered,
                                  OrderFilterKind::Antidiscrete, cfg.depth);
  SitusMorphism i;  // {1} -> I^<= at the first chain element
  for (int n = 1; n <= cfg.depth; ++n) {
    SetMap m(1, static_cast<int>(B.level(n).size()));
    m.tab[0] = B.level(n).at(Tuple(static_cast<std::size_t>(n), 0));
    i.level_maps.push_back(std::move(m));
  }
  SitusMorphism f;  // {1} -> Qs at the class of (b,..,b,a)
  for (int n = 1; n <= cfg.depth; ++n) {
    SetMap m(1, static_cast<int>(Qs.level(n).size()));
    Tuple t(static_cast<std::size_t>(n), b);
    t.push_back(a);
    m.tab[0] = prS.level(n)(Sfull.level(n).at(t));
    f.level_maps.push_back(std::move(m));
  }
  LiftingInstance inst;
  inst.A = &One;
  inst.B = &B;
  inst.X = &Qs;
  inst.Y = &Q;
  inst.i = i;
  inst.p = p;
  bool lifting = true;
  for (const auto& g : hom_set(B, Q)) {
    bool commutes = true;
    for (int n = 1; n <= cfg.depth && commutes; ++n)
      commutes = SetMap::compose(p.level(n), f.level(n)) ==
                 SetMap::compose(g.level(n), i.level(n));
    if (!commutes) continue;
    if (!has_lift(inst, f, g)) {
      lifting = false;
      std::ostringstream os;
      for (std::size_t e = 0; e < g.level(1).tab.size(); ++e)
        os << (e ? "," : "") << g.level(1).tab[e];
      v.witness["lifting_sequence_classes"] = os.str();
      break;
    }
  }
  v.holds = lifting;
  return v;
}

Verdict tree_property(const FinStructure& M, const TruthTable& phi,
                      int branching, int tree_depth, int k, TreeCheckMode mode,
                      const CheckConfig& cfg) {
  Verdict v;
  v.property = "ntp";
  echo_config(v, M, cfg);
  v.config["branching"] = std::to_string(branching);
  v.config["tree_depth"] = std::to_string(tree_depth);
  v.config["k"] = std::to_string(k);
  if (phi.arity != 2)
    throw DomainError("tree_property: phi must be binary (witness, parameter)");
  FinTree T = FinTree::make(branching, tree_depth);
  const int nn = static_cast<int>(T.nodes.size());

  auto consistent = [&](const std::vector<int>& params) {
    for (int x = 0; x < M.size(); ++x) {
      bool all = true;
      for (int p : params)
        if (!phi.at({x, p})) {
          all = false;
          break;
        }
      if (all) return true;
    }
    return params.empty();
  };

  // children and leaf branches of the tree
  std::vector<std::vector<int>> children(static_cast<std::size_t>(nn));
  for (int s = 0; s < nn; ++s)
    for (int t = 0; t < nn; ++t)
      if (s != t && T.prefix_le(s, t) &&
          T.nodes.elems[static_cast<std::size_t>(t)].size() ==
              T.nodes.elems[static_cast<std::size_t>(s)].size() + 1)
        children[static_cast<std::size_t>(s)].push_back(t);
  std::vector<std::vector<int>> branches;  // nonempty prefixes of each leaf
  for (int t = 0; t < nn; ++t) {
    if (static_cast<int>(T.nodes.elems[static_cast<std::size_t>(t)].size()) !=
        tree_depth)
      continue;
    std::vector<int> br;
    for (int s = 0; s < nn; ++s)
      if (!T.nodes.elems[static_cast<std::size_t>(s)].empty() &&
          T.prefix_le(s, t))
        br.push_back(s);
    branches.push_back(br);
  }

  // oracle: search parameter assignments on non-root nodes
  bool tp_found = false;
  if (mode != TreeCheckMode::Lifting) {
    std::vector<int> assign(static_cast<std::size_t>(nn), 0);
    std::vector<int> nonroot;
    for (int s = 0; s < nn; ++s)
      if (!T.nodes.elems[static_cast<std::size_t>(s)].empty())
        nonroot.push_back(s);
    std::function<bool(std::size_t)> rec = [&](std::size_t idx) -> bool {
      if (idx == nonroot.size()) {
        for (int s = 0; s < nn; ++s) {
          const auto& ch = children[static_cast<std::size_t>(s)];
          if (ch.empty()) continue;
          // every k-subset of the sibling family must be inconsistent
          std::vector<int> sel;
          std::function<bool(std::size_t)> ksub = [&](std::size_t lo) -> bool {
            if (static_cast<int>(sel.size()) == k) {
              std::vector<int> params;
              for (int c : sel)
                params.push_back(assign[static_cast<std::size_t>(c)]);
              return !consistent(params);
            }
            for (std::size_t i = lo; i < ch.size(); ++i) {
              sel.push_back(ch[i]);
              bool ok = ksub(i + 1);
              sel.pop_back();
              if (!ok) return false;
            }
            return true;
          };
          if (!ksub(0)) return false;
        }
        for (const auto& br : branches) {
          std::vector<int> params;
          for (int s : br) params.push_back(assign[static_cast<std::size_t>(s)]);
          if (!consistent(params)) return false;
        }
        return true;
      }
      for (int e = 0; e < M.size(); ++e) {
        assign[static_cast<std::size_t>(nonroot[idx])] = e;
        if (rec(idx + 1)) return true;
      }
      return false;
    };
    tp_found = rec(0);
    if (tp_found) {
      std::ostringstream os;
      for (int s = 0; s < nn; ++s) {
        if (T.nodes.elems[static_cast<std::size_t>(s)].empty()) continue;
        os << (os.tellp() > 0 ? " " : "");
        for (std::size_t i = 0;
             i < T.nodes.elems[static_cast<std::size_t>(s)].size(); ++i)
          os << T.nodes.elems[static_cast<std::size_t>(s)][i];
        os << "->" << M.universe[static_cast<std::size_t>(
                           assign[static_cast<std::size_t>(s)])];
      }
      v.witness["tree"] = os.str();
    }
  }
  v.oracle_holds = !tp_found;  // NTP

  // lifting: prefix -> prefix ∪ antichain against the consistency space
  bool lifting_holds = true;
  if (mode != TreeCheckMode::Oracle) {
    TreeObjects obj = tree_objects(T, cfg.depth);
    const TruncatedSitus& U = obj.prefix_union_antichain;
    // vertex maps nodes -> |M|
    std::vector<int> vmap(static_cast<std::size_t>(nn), 0);
    auto prefix_continuous = [&]() {
      for (int n = 1; n <= cfg.depth; ++n)
        for (const auto& t : obj.prefix.level(n).elems) {
          std::vector<int> params;
          for (int s : t) params.push_back(vmap[static_cast<std::size_t>(s)]);
          if (!consistent(params)) return false;
        }
      return true;
    };
    auto union_continuous = [&]() {
      for (int n = 1; n <= cfg.depth; ++n) {
        const auto& h = *U.filter(n).hits;
        for (const auto& target : h.targets) {
          bool hit = false;
          for (int e : target.to_vector()) {
            const Tuple& t = U.level(n).elems[static_cast<std::size_t>(e)];
            std::vector<int> params;
            for (int s : t) params.push_back(vmap[static_cast<std::size_t>(s)]);
            if (consistent(params)) {
              hit = true;
              break;
            }
          }
          if (!hit) return false;
        }
      }
      return true;
    };
    std::function<bool(std::size_t)> rec = [&](std::size_t idx) -> bool {
      if (idx == vmap.size()) {
        if (!prefix_continuous()) return true;
        if (union_continuous()) return true;
        std::ostringstream os;
        for (std::size_t s = 0; s < vmap.size(); ++s)
          os << (s ? "," : "")
             << M.universe[static_cast<std::size_t>(vmap[s])];
        v.witness["lifting_parameters"] = os.str();
        return false;
      }
      for (int e = 0; e < M.size(); ++e) {
        vmap[idx] = e;
        if (!rec(idx + 1)) return false;
      }
      return true;
    };
    lifting_holds = rec(0);
  }
  v.holds = lifting_holds;
  v.parts["agreement"] = (mode != TreeCheckMode::Both) || (v.holds == v.oracle_holds);
  return v;
}

bool em_represents(const FinStructure& I, const FinStructure& M,
                   const SetMap& f, RepresentMode mode, int L,
                   const CheckConfig& cfg) {
  if (f.src != I.size() || f.dst != M.size())
    throw DomainError("em_represents: map endpoints mismatch");
  if (mode == RepresentMode::Represents) {
    if (I.size() != M.size() || !(f == SetMap::identity(I.size())))
      throw DomainError("em_represents: Represents mode needs the identity map");
    for (int n = 1; n <= std::min(L, 4); ++n) {
      auto atoms = qf_atom_tables(I, n, false);
      auto orbits = type_orbits(M, {}, n);
      std::map<std::vector<char>, std::set<int>> by_qftp;
      std::size_t total = 1;
      for (int i = 0; i < n; ++i) total *= static_cast<std::size_t>(I.size());
      Tuple t(static_cast<std::size_t>(n), 0);
      for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rem = idx;
        for (int i = n - 1; i >= 0; --i) {
          t[static_cast<std::size_t>(i)] =
              static_cast<int>(rem % static_cast<std::size_t>(I.size()));
          rem /= static_cast<std::size_t>(I.size());
        }
        std::vector<char> fp;
        for (const auto& a : atoms) fp.push_back(a.at(t) ? 1 : 0);
        by_qftp[fp].insert(orbits[idx]);
      }
      for (const auto& [fp, orbs] : by_qftp)
        if (orbs.size() > 1) return false;
    }
    return true;
  }
  // EM / EMinfty: with finite cutoffs the full quantifier-free family is the
  // weakest witness for Delta, so both modes reduce to the same sweep.
  auto delta = qf_atom_tables(I, 1);
  auto d2 = qf_atom_tables(I, 2);
  delta.insert(delta.end(), d2.begin(), d2.end());
  auto upsilon = cutoff_formulas(M, 1, cfg.cutoff());
  auto u2 = cutoff_formulas(M, 2, cfg.cutoff());
  upsilon.insert(upsilon.end(), u2.begin(), u2.end());
  return for_each_sequence(I.size(), L, [&](const Tuple& seq) {
    for (const auto& d : delta)
      if (!is_indiscernible(I, d, seq, IndiscKind::WithRepetitions)) return true;
    Tuple image;
    for (int s : seq) image.push_back(f(s));
    for (const auto& u : upsilon)
      if (!is_indiscernible(M, u, image, IndiscKind::WithRepetitions))
        return false;
    return true;
  });
}

FinStructure unary_reduct(const FinStructure& I) {
  std::vector<std::string> names;
  auto monoid = function_monoid(I, &names);
  FinStructure R;
  R.universe = I.universe;
  for (std::size_t m = 0; m < monoid.size(); ++m) {
    std::string rn = "E_" + names[m];
    R.sig.rels.push_back({rn, 2});
    std::set<Tuple>& tuples = R.rels[rn];
    for (int x = 0; x < I.size(); ++x)
      for (int y = 0; y < I.size(); ++y)
        if (monoid[m][static_cast<std::size_t>(x)] ==
            monoid[m][static_cast<std::size_t>(y)])
          tuples.insert({x, y});
  }
  for (std::size_t m1 = 0; m1 < monoid.size(); ++m1)
    for (std::size_t m2 = m1 + 1; m2 < monoid.size(); ++m2) {
      std::string rn = "P_" + names[m1] + "_" + names[m2];
      R.sig.rels.push_back({rn, 1});
      std::set<Tuple>& tuples = R.rels[rn];
      for (int x = 0; x < I.size(); ++x)
        if (monoid[m1][static_cast<std::size_t>(x)] ==
            monoid[m2][static_cast<std::size_t>(x)])
          tuples.insert({x});
    }
  return R;
}

bool is_symmetric(const TruncatedSitus& X) {
  for (int n = 1; n <= X.depth; ++n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    do {
      SetMap m(static_cast<int>(X.level(n).size()),
               static_cast<int>(X.level(n).size()));
      for (std::size_t e = 0; e < X.level(n).size(); ++e) {
        const Tuple& t = X.level(n).elems[e];
        Tuple u(t.size());
        for (int i = 0; i < n; ++i)
          u[static_cast<std::size_t>(i)] =
              t[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
        int idx = X.level(n).find(u);
        if (idx < 0) return false;  // carrier not permutation-closed
        m.tab[e] = idx;
      }
      if (!is_continuous(m, X.filter(n), X.filter(n))) return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return true;
}

bool is_two_dimensional(const TruncatedSitus& X) {
  for (int n = 4; n <= X.depth; ++n) {
    std::vector<std::pair<SetMap, Filter>> targets;
    for (const auto& idx : weakly_increasing_lists(n, 3))
      targets.emplace_back(X.face(n, idx), X.filter(3));
    Filter coarse =
        coarsest_filter(static_cast<int>(X.level(n).size()), targets);
    if (!filters_equal(coarse, X.filter(n))) return false;
  }
  return true;
}

}  // namespace situskit
