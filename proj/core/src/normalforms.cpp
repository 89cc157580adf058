#include "propkit/normalforms.hpp"

#include <utility>

#include "propkit/errors.hpp"

namespace propkit {

struct NnfFormula::Node {
  Kind kind;
  VarName var;
  std::shared_ptr<const Node> lhs, rhs;

  Node(Kind k, VarName v, std::shared_ptr<const Node> l, std::shared_ptr<const Node> r)
      : kind(k), var(std::move(v)), lhs(std::move(l)), rhs(std::move(r)) {}
};

NnfFormula::NnfFormula() {
  static const auto node =
      std::make_shared<const Node>(Kind::Bot, VarName{}, nullptr, nullptr);
  node_ = node;
}

NnfFormula NnfFormula::pos(VarName v) {
  return NnfFormula(std::make_shared<const Node>(Kind::Pos, std::move(v), nullptr, nullptr));
}

NnfFormula NnfFormula::neg(VarName v) {
  return NnfFormula(std::make_shared<const Node>(Kind::Neg, std::move(v), nullptr, nullptr));
}

NnfFormula NnfFormula::bot() { return NnfFormula(); }

NnfFormula NnfFormula::top() {
  static const auto node =
      std::make_shared<const Node>(Kind::Top, VarName{}, nullptr, nullptr);
  return NnfFormula(node);
}

NnfFormula NnfFormula::conj(NnfFormula lhs, NnfFormula rhs) {
  return NnfFormula(std::make_shared<const Node>(Kind::Conj, VarName{}, std::move(lhs.node_),
                                                 std::move(rhs.node_)));
}

NnfFormula NnfFormula::disj(NnfFormula lhs, NnfFormula rhs) {
  return NnfFormula(std::make_shared<const Node>(Kind::Disj, VarName{}, std::move(lhs.node_),
                                                 std::move(rhs.node_)));
}

NnfFormula::Kind NnfFormula::kind() const { return node_->kind; }

const VarName& NnfFormula::var() const { return node_->var; }

NnfFormula NnfFormula::lhs() const { return NnfFormula(node_->lhs); }

NnfFormula NnfFormula::rhs() const { return NnfFormula(node_->rhs); }

bool operator==(const NnfFormula& a, const NnfFormula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case NnfFormula::Kind::Pos:
    case NnfFormula::Kind::Neg: return a.var() == b.var();
    case NnfFormula::Kind::Bot:
    case NnfFormula::Kind::Top: return true;
    default: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

NnfFormula make_nnf(const Formula& a, Polarity p) {
  switch (a.kind()) {
    case Formula::Kind::Var:
      return p == Polarity::Pos ? NnfFormula::pos(a.var_name()) : NnfFormula::neg(a.var_name());
    case Formula::Kind::Bot:
      return p == Polarity::Pos ? NnfFormula::bot() : NnfFormula::top();
    case Formula::Kind::Disj:
      return p == Polarity::Pos
                 ? NnfFormula::disj(make_nnf(a.lhs(), p), make_nnf(a.rhs(), p))
                 : NnfFormula::conj(make_nnf(a.lhs(), p), make_nnf(a.rhs(), p));
    case Formula::Kind::Conj:
      return p == Polarity::Pos
                 ? NnfFormula::conj(make_nnf(a.lhs(), p), make_nnf(a.rhs(), p))
                 : NnfFormula::disj(make_nnf(a.lhs(), p), make_nnf(a.rhs(), p));
    case Formula::Kind::Impl:
      return p == Polarity::Pos
                 ? NnfFormula::disj(make_nnf(a.lhs(), Polarity::Neg),
                                    make_nnf(a.rhs(), Polarity::Pos))
                 : NnfFormula::conj(make_nnf(a.lhs(), Polarity::Pos),
                                    make_nnf(a.rhs(), Polarity::Neg));
  }
  return NnfFormula::bot();
}

Formula literal_to_formula(const Literal& l) {
  switch (l.kind) {
    case Literal::Kind::Pos: return Formula::var(l.var);
    case Literal::Kind::Neg: return Formula::neg(Formula::var(l.var));
    case Literal::Kind::Bot: return Formula::bot();
    case Literal::Kind::Top: return Formula::top();
  }
  return Formula::bot();
}

Formula nnf_to_formula(const NnfFormula& n) {
  switch (n.kind()) {
    case NnfFormula::Kind::Pos: return Formula::var(n.var());
    case NnfFormula::Kind::Neg: return Formula::neg(Formula::var(n.var()));
    case NnfFormula::Kind::Bot: return Formula::bot();
    case NnfFormula::Kind::Top: return Formula::top();
    case NnfFormula::Kind::Conj:
      return Formula::conj(nnf_to_formula(n.lhs()), nnf_to_formula(n.rhs()));
    case NnfFormula::Kind::Disj:
      return Formula::disj(nnf_to_formula(n.lhs()), nnf_to_formula(n.rhs()));
  }
  return Formula::bot();
}

Formula clause_to_formula(const Clause& c) {
  return map_fold_right(literal_to_formula, Formula::disj, Formula::bot(), c);
}

Formula cnf_to_formula(const CnfFormula& c) {
  return map_fold_right(clause_to_formula, Formula::conj, Formula::top(), c);
}

CnfFormula add_clause(const Clause& l, const CnfFormula& ll) {
  CnfFormula out;
  out.reserve(ll.size());
  for (const Clause& l2 : ll) {
    Clause merged = l;
    merged.insert(merged.end(), l2.begin(), l2.end());
    out.push_back(std::move(merged));
  }
  return out;
}

CnfFormula disjunct(const CnfFormula& ll, const CnfFormula& ll2) {
  CnfFormula out;
  for (const Clause& l : ll) {
    CnfFormula block = add_clause(l, ll2);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

CnfFormula make_cnf(const NnfFormula& n) {
  switch (n.kind()) {
    case NnfFormula::Kind::Pos: return {{Literal::pos(n.var())}};
    case NnfFormula::Kind::Neg: return {{Literal::neg(n.var())}};
    case NnfFormula::Kind::Bot: return {{Literal::bot()}};
    case NnfFormula::Kind::Top: return {{Literal::top()}};
    case NnfFormula::Kind::Conj: {
      CnfFormula out = make_cnf(n.lhs());
      CnfFormula right = make_cnf(n.rhs());
      out.insert(out.end(), right.begin(), right.end());
      return out;
    }
    case NnfFormula::Kind::Disj: return disjunct(make_cnf(n.lhs()), make_cnf(n.rhs()));
  }
  return {};
}

ClauseVerdict clause_decide(const Clause& c) {
  for (const Literal& l : c) {
    if (l.kind == Literal::Kind::Top) return ClauseVerdict{};
    if (l.kind == Literal::Kind::Pos) {
      for (const Literal& m : c)
        if (m.kind == Literal::Kind::Neg && m.var == l.var) return ClauseVerdict{};
    }
  }
  // Refuted: true exactly where a negative literal occurs.
  Valuation v;
  for (const Literal& l : c) {
    if (l.kind == Literal::Kind::Neg)
      v.set(l.var, true);
    else if (l.kind == Literal::Kind::Pos && !v.defines(l.var))
      v.set(l.var, false);
  }
  return ClauseVerdict{std::move(v)};
}

CnfVerdict cnf_decide(const CnfFormula& c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    ClauseVerdict cv = clause_decide(c[i]);
    if (!cv.valid()) return CnfVerdict{i, std::move(*cv.countervaluation)};
  }
  return CnfVerdict{};
}

// ---------------------------------------------------------------------------
// Derivation constructions
// ---------------------------------------------------------------------------

namespace {

Context cons(Formula a, const Context& ctx) {
  Context out;
  out.reserve(ctx.size() + 1);
  out.push_back(std::move(a));
  out.insert(out.end(), ctx.begin(), ctx.end());
  return out;
}

// Transports d into `target`, of which d's context must be a suffix.
NcDerivation weaken_into(const NcDerivation& d, const Context& target) {
  const std::size_t shift = target.size() - d.context.size();
  std::vector<std::size_t> emb(d.context.size());
  for (std::size_t i = 0; i < emb.size(); ++i) emb[i] = i + shift;
  return nc_weaken(d, target, emb);
}

// (ctx |- top), i.e. bot -> bot by ImpI over the assumption itself.
NcDerivation top_proof(const Context& ctx) {
  return imp_i(nax(cons(Formula::bot(), ctx), 0));
}

// (ctx |- bot) to (ctx |- a): weaken under ~a, then reduce classically.
NcDerivation from_bot(const NcDerivation& bot_deriv, const Formula& a) {
  return bot_c(weaken_into(bot_deriv, cons(Formula::neg(a), bot_deriv.context)));
}

// Formula of the clause suffix c[t..]; t == c.size() gives bot.
Formula clause_suffix(const Clause& c, std::size_t t) {
  return clause_to_formula(Clause(c.begin() + static_cast<std::ptrdiff_t>(t), c.end()));
}

// From a derivation of literal k's formula, rebuild the whole nested
// disjunction of the clause by one OrI1 and a chain of OrI2s.
NcDerivation lift_literal(const Clause& c, std::size_t k, NcDerivation lit) {
  NcDerivation d = or_i1(std::move(lit), clause_suffix(c, k + 1));
  for (std::size_t t = k; t-- > 0;) d = or_i2(literal_to_formula(c[t]), std::move(d));
  return d;
}

// ([] |- clause_to_formula(c)) for a clause that decided valid.
NcDerivation prove_valid_clause(const Clause& c) {
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k].kind == Literal::Kind::Top)
      return lift_literal(c, k, top_proof(Context{}));

  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].kind != Literal::Kind::Pos) continue;
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c[j].kind != Literal::Kind::Neg || !(c[j].var == c[i].var)) continue;
      // Classical step: from ~D derive both ~x and ~~x, hence bot.
      const Formula x = Formula::var(c[i].var);
      const Formula goal = clause_to_formula(c);
      const Context ctx0{Formula::neg(goal)};

      const Context pos_ctx = cons(x, ctx0);
      NcDerivation not_x =
          imp_i(imp_e(nax(pos_ctx, 1), lift_literal(c, i, nax(pos_ctx, 0))));

      const Context neg_ctx = cons(Formula::neg(x), ctx0);
      NcDerivation not_not_x =
          imp_i(imp_e(nax(neg_ctx, 1), lift_literal(c, j, nax(neg_ctx, 0))));

      return bot_c(imp_e(std::move(not_not_x), std::move(not_x)));
    }
  }
  throw EvidenceError("clause is not syntactically valid");
}

// and_e2 applied `count` times.
NcDerivation peel_second(NcDerivation h, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) h = and_e2(std::move(h));
  return h;
}

// From h : (G |- cnf_to_formula(first ++ rest)), derivations of
// (G |- cnf_to_formula(first)) and (G |- cnf_to_formula(rest)). The rest
// is the tail of the conjunction as-is; the first part must be rebuilt
// clause by clause because its terminating top differs.
std::pair<NcDerivation, NcDerivation> split_cnf_conj(const NcDerivation& h,
                                                     const CnfFormula& first) {
  NcDerivation rebuilt = top_proof(h.context);
  for (std::size_t i = first.size(); i-- > 0;)
    rebuilt = and_i(and_e1(peel_second(h, i)), std::move(rebuilt));
  return {std::move(rebuilt), peel_second(h, first.size())};
}

// ([] |- F(b ++ c) -> F(b) | F(c)) by induction on b, where F embeds
// clauses as nested disjunctions.
NcDerivation clause_append_split(const Clause& b, const Clause& c) {
  const Formula fc = clause_to_formula(c);
  if (b.empty()) {
    const Context h{fc};
    return imp_i(or_i2(Formula::bot(), nax(h, 0)));
  }
  Clause b_tail(b.begin() + 1, b.end());
  Clause bc = b;
  bc.insert(bc.end(), c.begin(), c.end());

  const Formula fl = literal_to_formula(b[0]);
  const Formula fbt = clause_to_formula(b_tail);
  const Formula fb = clause_to_formula(b);  // fl | fbt

  NcDerivation ih = clause_append_split(b_tail, c);  // F(b_tail++c) -> F(b_tail)|F(c)

  const Context h{clause_to_formula(bc)};  // F(b++c) = fl | F(b_tail++c)

  // Case fl: (fl | fbt) | fc by two left injections.
  const Context lh = cons(fl, h);
  NcDerivation left = or_i1(or_i1(nax(lh, 0), fbt), fc);

  // Case F(b_tail++c): split with the induction hypothesis.
  const Context rh = cons(clause_to_formula([&] {
                            Clause t = b_tail;
                            t.insert(t.end(), c.begin(), c.end());
                            return t;
                          }()),
                          h);
  NcDerivation split = imp_e(weaken_into(ih, rh), nax(rh, 0));
  const Context rlh = cons(fbt, rh);
  NcDerivation rleft = or_i1(or_i2(fl, nax(rlh, 0)), fc);
  const Context rrh = cons(fc, rh);
  NcDerivation rright = or_i2(fb, nax(rrh, 0));
  NcDerivation right = or_e(std::move(split), std::move(rleft), std::move(rright));

  return imp_i(or_e(nax(h, 0), std::move(left), std::move(right)));
}

// ([] |- C(add_clause(b, e)) -> F(b) | C(e)) by induction on e, where C
// embeds CNFs as nested conjunctions.
NcDerivation add_clause_split(const Clause& b, const CnfFormula& e) {
  const Formula fb = clause_to_formula(b);
  if (e.empty()) {
    const Context h{Formula::top()};
    return imp_i(or_i2(fb, nax(h, 0)));
  }
  const Clause& e0 = e[0];
  CnfFormula e_tail(e.begin() + 1, e.end());

  Clause be0 = b;
  be0.insert(be0.end(), e0.begin(), e0.end());
  const Formula fe0 = clause_to_formula(e0);
  const Formula ce_tail = cnf_to_formula(e_tail);
  const Formula ce = cnf_to_formula(e);  // fe0 & ce_tail

  NcDerivation ih = add_clause_split(b, e_tail);
  NcDerivation appended = clause_append_split(b, e0);

  const Context h{cnf_to_formula(add_clause(b, e))};
  NcDerivation h1 = and_e1(nax(h, 0));  // F(b++e0)
  NcDerivation h2 = and_e2(nax(h, 0));  // C(add_clause(b, e_tail))
  NcDerivation split = imp_e(weaken_into(appended, h), std::move(h1));  // fb | fe0
  NcDerivation ih_app = imp_e(weaken_into(ih, h), std::move(h2));       // fb | ce_tail

  const Context bh = cons(fb, h);
  NcDerivation case_b = or_i1(nax(bh, 0), ce);

  const Context eh = cons(fe0, h);
  NcDerivation ih_app_w = weaken_into(ih_app, eh);
  const Context ebh = cons(fb, eh);
  NcDerivation inner_b = or_i1(nax(ebh, 0), ce);
  const Context eth = cons(ce_tail, eh);
  NcDerivation inner_t = or_i2(fb, and_i(nax(eth, 1), nax(eth, 0)));
  NcDerivation case_e = or_e(std::move(ih_app_w), std::move(inner_b), std::move(inner_t));

  return imp_i(or_e(std::move(split), std::move(case_b), std::move(case_e)));
}

// ([] |- C(disjunct(d1, d2)) -> C(d1) | C(d2)) by induction on d1.
NcDerivation disjunct_split(const CnfFormula& d1, const CnfFormula& d2) {
  const Formula c2 = cnf_to_formula(d2);
  if (d1.empty()) {
    const Context h{Formula::top()};
    return imp_i(or_i1(nax(h, 0), c2));
  }
  const Clause& b = d1[0];
  CnfFormula d1_tail(d1.begin() + 1, d1.end());

  const Formula fb = clause_to_formula(b);
  const Formula c1_tail = cnf_to_formula(d1_tail);
  const Formula c1 = cnf_to_formula(d1);  // fb & c1_tail

  NcDerivation ih = disjunct_split(d1_tail, d2);
  NcDerivation added = add_clause_split(b, d2);

  const CnfFormula head_block = add_clause(b, d2);

  const Context h{cnf_to_formula(disjunct(d1, d2))};
  auto [first, second] = split_cnf_conj(nax(h, 0), head_block);
  NcDerivation d_or = imp_e(weaken_into(added, h), std::move(first));  // fb | c2
  NcDerivation ih_app = imp_e(weaken_into(ih, h), std::move(second));  // c1_tail | c2

  const Context bh = cons(fb, h);
  NcDerivation ih_app_w = weaken_into(ih_app, bh);
  const Context bth = cons(c1_tail, bh);
  NcDerivation inner_t = or_i1(and_i(nax(bth, 1), nax(bth, 0)), c2);
  const Context bc2h = cons(c2, bh);
  NcDerivation inner_c2 = or_i2(c1, nax(bc2h, 0));
  NcDerivation case_b = or_e(std::move(ih_app_w), std::move(inner_t), std::move(inner_c2));

  const Context c2h = cons(c2, h);
  NcDerivation case_c2 = or_i2(c1, nax(c2h, 0));

  return imp_i(or_e(std::move(d_or), std::move(case_b), std::move(case_c2)));
}

}  // namespace

NcDerivation cnf_provable(const CnfFormula& c, const CnfVerdict& evidence) {
  if (!evidence.valid()) throw EvidenceError("verdict is not Valid");
  if (!cnf_decide(c).valid()) throw EvidenceError("CNF no longer decides valid");

  NcDerivation d = top_proof(Context{});
  for (std::size_t i = c.size(); i-- > 0;)
    d = and_i(prove_valid_clause(c[i]), std::move(d));
  return d;
}

NcDerivation cnf_impl_prov(const NnfFormula& n) {
  switch (n.kind()) {
    case NnfFormula::Kind::Pos:
    case NnfFormula::Kind::Neg:
    case NnfFormula::Kind::Bot:
    case NnfFormula::Kind::Top: {
      const Formula lit = nnf_to_formula(n);
      const Context h{cnf_to_formula(make_cnf(n))};  // (lit | bot) & top
      NcDerivation d_or = and_e1(nax(h, 0));
      const Context lh = cons(lit, h);
      const Context bh = cons(Formula::bot(), h);
      NcDerivation cases = or_e(std::move(d_or), nax(lh, 0), from_bot(nax(bh, 0), lit));
      return imp_i(std::move(cases));
    }
    case NnfFormula::Kind::Conj: {
      const NnfFormula bn = n.lhs(), cn = n.rhs();
      NcDerivation db = cnf_impl_prov(bn);
      NcDerivation dc = cnf_impl_prov(cn);
      const CnfFormula mb = make_cnf(bn), mc = make_cnf(cn);
      const Context h{cnf_to_formula(make_cnf(n))};
      auto [first, second] = split_cnf_conj(nax(h, 0), mb);
      NcDerivation nb = imp_e(weaken_into(db, h), std::move(first));
      NcDerivation nc = imp_e(weaken_into(dc, h), std::move(second));
      return imp_i(and_i(std::move(nb), std::move(nc)));
    }
    case NnfFormula::Kind::Disj: {
      const NnfFormula bn = n.lhs(), cn = n.rhs();
      NcDerivation db = cnf_impl_prov(bn);
      NcDerivation dc = cnf_impl_prov(cn);
      const CnfFormula mb = make_cnf(bn), mc = make_cnf(cn);
      const Formula fnb = nnf_to_formula(bn), fnc = nnf_to_formula(cn);
      NcDerivation split_lemma = disjunct_split(mb, mc);

      const Context h{cnf_to_formula(make_cnf(n))};
      NcDerivation split = imp_e(weaken_into(split_lemma, h), nax(h, 0));
      const Context bh = cons(cnf_to_formula(mb), h);
      NcDerivation case_b = or_i1(imp_e(weaken_into(db, bh), nax(bh, 0)), fnc);
      const Context ch = cons(cnf_to_formula(mc), h);
      NcDerivation case_c = or_i2(fnb, imp_e(weaken_into(dc, ch), nax(ch, 0)));
      return imp_i(or_e(std::move(split), std::move(case_b), std::move(case_c)));
    }
  }
  throw EvidenceError("unreachable");
}

NcDerivation nnf_impl_prov(const Formula& a, Polarity p) {
  const Formula goal = p == Polarity::Pos ? a : Formula::neg(a);
  const Formula src = nnf_to_formula(make_nnf(a, p));

  switch (a.kind()) {
    case Formula::Kind::Var:
    case Formula::Kind::Bot: {
      // Literals translate to themselves (bot's negative form is top = ~bot,
      // still an implication to itself up to the abbreviation).
      const Context h{src};
      return imp_i(nax(h, 0));
    }
    case Formula::Kind::Disj: {
      const Formula b = a.lhs(), c = a.rhs();
      if (p == Polarity::Pos) {
        NcDerivation db = nnf_impl_prov(b, Polarity::Pos);
        NcDerivation dc = nnf_impl_prov(c, Polarity::Pos);
        const Context h{src};
        const Context bh = cons(nnf_to_formula(make_nnf(b, p)), h);
        const Context ch = cons(nnf_to_formula(make_nnf(c, p)), h);
        NcDerivation case_b = or_i1(imp_e(weaken_into(db, bh), nax(bh, 0)), c);
        NcDerivation case_c = or_i2(b, imp_e(weaken_into(dc, ch), nax(ch, 0)));
        return imp_i(or_e(nax(h, 0), std::move(case_b), std::move(case_c)));
      }
      // src = N(b-) & N(c-), goal = ~(b | c)
      NcDerivation db = nnf_impl_prov(b, Polarity::Neg);
      NcDerivation dc = nnf_impl_prov(c, Polarity::Neg);
      const Context h{src};
      const Context h2 = cons(Formula::disj(b, c), h);
      const Context bh = cons(b, h2);
      const Context ch = cons(c, h2);
      NcDerivation case_b = imp_e(imp_e(weaken_into(db, bh), and_e1(nax(bh, 2))), nax(bh, 0));
      NcDerivation case_c = imp_e(imp_e(weaken_into(dc, ch), and_e2(nax(ch, 2))), nax(ch, 0));
      return imp_i(imp_i(or_e(nax(h2, 0), std::move(case_b), std::move(case_c))));
    }
    case Formula::Kind::Conj: {
      const Formula b = a.lhs(), c = a.rhs();
      if (p == Polarity::Pos) {
        NcDerivation db = nnf_impl_prov(b, Polarity::Pos);
        NcDerivation dc = nnf_impl_prov(c, Polarity::Pos);
        const Context h{src};
        NcDerivation left = imp_e(weaken_into(db, h), and_e1(nax(h, 0)));
        NcDerivation right = imp_e(weaken_into(dc, h), and_e2(nax(h, 0)));
        return imp_i(and_i(std::move(left), std::move(right)));
      }
      // src = N(b-) | N(c-), goal = ~(b & c)
      NcDerivation db = nnf_impl_prov(b, Polarity::Neg);
      NcDerivation dc = nnf_impl_prov(c, Polarity::Neg);
      const Context h{src};
      const Context h2 = cons(Formula::conj(b, c), h);
      const Context bh = cons(nnf_to_formula(make_nnf(b, Polarity::Neg)), h2);
      const Context ch = cons(nnf_to_formula(make_nnf(c, Polarity::Neg)), h2);
      NcDerivation case_b = imp_e(imp_e(weaken_into(db, bh), nax(bh, 0)), and_e1(nax(bh, 1)));
      NcDerivation case_c = imp_e(imp_e(weaken_into(dc, ch), nax(ch, 0)), and_e2(nax(ch, 1)));
      return imp_i(imp_i(or_e(nax(h2, 1), std::move(case_b), std::move(case_c))));
    }
    case Formula::Kind::Impl: {
      const Formula b = a.lhs(), c = a.rhs();
      if (p == Polarity::Pos) {
        // src = N(b-) | N(c+), goal = b -> c
        NcDerivation dbn = nnf_impl_prov(b, Polarity::Neg);
        NcDerivation dcp = nnf_impl_prov(c, Polarity::Pos);
        const Context h{src};
        const Context h2 = cons(b, h);
        const Context bh = cons(nnf_to_formula(make_nnf(b, Polarity::Neg)), h2);
        const Context ch = cons(nnf_to_formula(make_nnf(c, Polarity::Pos)), h2);
        NcDerivation absurd = imp_e(imp_e(weaken_into(dbn, bh), nax(bh, 0)), nax(bh, 1));
        NcDerivation case_b = from_bot(std::move(absurd), c);
        NcDerivation case_c = imp_e(weaken_into(dcp, ch), nax(ch, 0));
        return imp_i(imp_i(or_e(nax(h2, 1), std::move(case_b), std::move(case_c))));
      }
      // src = N(b+) & N(c-), goal = ~(b -> c)
      NcDerivation dbp = nnf_impl_prov(b, Polarity::Pos);
      NcDerivation dcn = nnf_impl_prov(c, Polarity::Neg);
      const Context h{src};
      const Context h2 = cons(Formula::impl(b, c), h);
      NcDerivation bb = imp_e(weaken_into(dbp, h2), and_e1(nax(h2, 1)));
      NcDerivation cc = imp_e(nax(h2, 0), std::move(bb));
      NcDerivation ncd = imp_e(weaken_into(dcn, h2), and_e2(nax(h2, 1)));
      return imp_i(imp_i(imp_e(std::move(ncd), std::move(cc))));
    }
  }
  throw EvidenceError("unreachable");
}

CompletenessResult complete(const Formula& a) {
  const NnfFormula n = make_nnf(a, Polarity::Pos);
  const CnfFormula c = make_cnf(n);
  CnfVerdict verdict = cnf_decide(c);
  if (!verdict.valid())
    return CompletenessResult{std::nullopt, std::move(verdict.countervaluation)};

  NcDerivation base = cnf_provable(c, verdict);
  NcDerivation nnf_form = imp_e(cnf_impl_prov(n), std::move(base));
  NcDerivation proof = imp_e(nnf_impl_prov(a, Polarity::Pos), std::move(nnf_form));
  return CompletenessResult{std::move(proof), Valuation{}};
}

}  // namespace propkit
