#include "propkit/sequent.hpp"

#include <utility>

#include "propkit/errors.hpp"

namespace propkit {

std::string to_string(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.gamma.size(); ++i) {
    if (i) out += ", ";
    out += to_string(s.gamma[i]);
  }
  out += out.empty() ? "=>" : " =>";
  for (std::size_t i = 0; i < s.delta.size(); ++i) {
    out += i ? ", " : " ";
    out += to_string(s.delta[i]);
  }
  return out;
}

namespace {

using Path = std::vector<std::size_t>;

Context cons(Formula a, const Context& ctx) {
  Context out;
  out.reserve(ctx.size() + 1);
  out.push_back(std::move(a));
  out.insert(out.end(), ctx.begin(), ctx.end());
  return out;
}

Context insert_at(const Context& ctx, std::size_t pos, const Formula& a) {
  Context out = ctx;
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(pos), a);
  return out;
}

Context erase_at(const Context& ctx, std::size_t pos) {
  Context out = ctx;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(pos));
  return out;
}

Context replace1(const Context& ctx, std::size_t pos, const Formula& a) {
  Context out = ctx;
  out[pos] = a;
  return out;
}

Context replace2(const Context& ctx, std::size_t pos, const Formula& a, const Formula& b) {
  Context out = ctx;
  out[pos] = a;
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(pos) + 1, b);
  return out;
}

std::size_t gc_arity(GcRule r) {
  switch (r) {
    case GcRule::Gax:
    case GcRule::GBot: return 0;
    case GcRule::AndL:
    case GcRule::OrR:
    case GcRule::ImpR: return 1;
    default: return 2;
  }
}

[[noreturn]] void fail(CheckError::Kind kind, const Path& path, const std::string& msg) {
  throw CheckError(kind, path, msg);
}

void expect(bool ok, const Path& path, const std::string& msg) {
  if (!ok) fail(CheckError::Kind::RuleMismatch, path, msg);
}

void check_node(const GcDerivation& d, const Path& path) {
  if (d.premises.size() != gc_arity(d.rule))
    fail(CheckError::Kind::BadArity, path,
         "rule expects " + std::to_string(gc_arity(d.rule)) + " premises, found " +
             std::to_string(d.premises.size()));
  for (const auto& p : d.premises)
    if (!p) fail(CheckError::Kind::BadArity, path, "null premise");
  const Context& g = d.sequent.gamma;
  const Context& dl = d.sequent.delta;

  auto active = [&](const Context& side, std::size_t pos, Formula::Kind want,
                    const char* rule) -> Formula {
    if (pos >= side.size())
      fail(CheckError::Kind::BadIndex, path,
           std::string(rule) + ": position " + std::to_string(pos) + " out of range");
    const Formula& f = side[pos];
    expect(f.kind() == want, path,
           std::string(rule) + ": active formula " + to_string(f) + " has the wrong shape");
    return f;
  };

  switch (d.rule) {
    case GcRule::Gax: {
      if (d.pos >= g.size() || d.pos2 >= dl.size())
        fail(CheckError::Kind::BadIndex, path, "Gax positions out of range");
      expect(g[d.pos] == dl[d.pos2], path, "Gax: the two positions hold different formulas");
      return;
    }
    case GcRule::GBot: {
      if (d.pos >= g.size())
        fail(CheckError::Kind::BadIndex, path, "GBot position out of range");
      expect(g[d.pos].is_bot(), path, "GBot: position does not hold bot");
      return;
    }
    case GcRule::AndL: {
      Formula f = active(g, d.pos, Formula::Kind::Conj, "AndL");
      const Sequent& p = d.premises[0]->sequent;
      expect(p.gamma == replace2(g, d.pos, f.lhs(), f.rhs()) && p.delta == dl, path,
             "AndL: premise does not replace A & B by A, B");
      return;
    }
    case GcRule::AndR: {
      Formula f = active(dl, d.pos, Formula::Kind::Conj, "AndR");
      const Sequent& p1 = d.premises[0]->sequent;
      const Sequent& p2 = d.premises[1]->sequent;
      expect(p1.gamma == g && p1.delta == replace1(dl, d.pos, f.lhs()), path,
             "AndR: first premise does not replace A & B by A");
      expect(p2.gamma == g && p2.delta == replace1(dl, d.pos, f.rhs()), path,
             "AndR: second premise does not replace A & B by B");
      return;
    }
    case GcRule::OrL: {
      Formula f = active(g, d.pos, Formula::Kind::Disj, "OrL");
      const Sequent& p1 = d.premises[0]->sequent;
      const Sequent& p2 = d.premises[1]->sequent;
      expect(p1.gamma == replace1(g, d.pos, f.lhs()) && p1.delta == dl, path,
             "OrL: first premise does not replace A | B by A");
      expect(p2.gamma == replace1(g, d.pos, f.rhs()) && p2.delta == dl, path,
             "OrL: second premise does not replace A | B by B");
      return;
    }
    case GcRule::OrR: {
      Formula f = active(dl, d.pos, Formula::Kind::Disj, "OrR");
      const Sequent& p = d.premises[0]->sequent;
      expect(p.gamma == g && p.delta == replace2(dl, d.pos, f.lhs(), f.rhs()), path,
             "OrR: premise does not replace A | B by A, B");
      return;
    }
    case GcRule::ImpL: {
      Formula f = active(g, d.pos, Formula::Kind::Impl, "ImpL");
      const Sequent& p1 = d.premises[0]->sequent;
      const Sequent& p2 = d.premises[1]->sequent;
      expect(p1.gamma == replace1(g, d.pos, f.rhs()) && p1.delta == dl, path,
             "ImpL: first premise does not replace A -> B by B");
      expect(p2.gamma == erase_at(g, d.pos) && p2.delta == cons(f.lhs(), dl), path,
             "ImpL: second premise does not drop A -> B and assert A");
      return;
    }
    case GcRule::ImpR: {
      Formula f = active(dl, d.pos, Formula::Kind::Impl, "ImpR");
      const Sequent& p = d.premises[0]->sequent;
      expect(p.gamma == cons(f.lhs(), g) && p.delta == replace1(dl, d.pos, f.rhs()), path,
             "ImpR: premise does not assume A and replace A -> B by B");
      return;
    }
    case GcRule::Cut: {
      if (!d.cut_formula) fail(CheckError::Kind::BadArity, path, "Cut carries no cut formula");
      const Formula& a = *d.cut_formula;
      const Sequent& p1 = d.premises[0]->sequent;
      const Sequent& p2 = d.premises[1]->sequent;
      expect(p1.gamma == g && p1.delta == cons(a, dl), path,
             "Cut: first premise is not G => A::D");
      expect(p2.gamma == cons(a, g) && p2.delta == dl, path,
             "Cut: second premise is not A::G => D");
      return;
    }
  }
}

void check_rec(const GcDerivation& d, Path& path) {
  check_node(d, path);
  for (std::size_t i = 0; i < d.premises.size(); ++i) {
    path.push_back(i);
    check_rec(*d.premises[i], path);
    path.pop_back();
  }
}

std::shared_ptr<const GcDerivation> share(GcDerivation d) {
  return std::make_shared<const GcDerivation>(std::move(d));
}

GcDerivation make_node(GcRule rule, std::size_t pos, std::size_t pos2,
                       std::optional<Formula> cut_formula, std::vector<GcDerivation> premises,
                       Sequent sequent) {
  GcDerivation d;
  d.rule = rule;
  d.pos = pos;
  d.pos2 = pos2;
  d.cut_formula = std::move(cut_formula);
  d.premises.reserve(premises.size());
  for (GcDerivation& p : premises) d.premises.push_back(share(std::move(p)));
  d.sequent = std::move(sequent);
  check_node(d, Path{});
  return d;
}

}  // namespace

Sequent check_gc(const GcDerivation& d) {
  Path path;
  check_rec(d, path);
  return d.sequent;
}

bool equal(const GcDerivation& a, const GcDerivation& b) {
  if (a.rule != b.rule || a.pos != b.pos || a.pos2 != b.pos2 ||
      a.cut_formula != b.cut_formula || a.sequent != b.sequent ||
      a.premises.size() != b.premises.size())
    return false;
  for (std::size_t i = 0; i < a.premises.size(); ++i)
    if (!equal(*a.premises[i], *b.premises[i])) return false;
  return true;
}

GcDerivation gax(Sequent s, std::size_t gamma_pos, std::size_t delta_pos) {
  return make_node(GcRule::Gax, gamma_pos, delta_pos, std::nullopt, {}, std::move(s));
}

GcDerivation gbot(Sequent s, std::size_t gamma_pos) {
  return make_node(GcRule::GBot, gamma_pos, 0, std::nullopt, {}, std::move(s));
}

GcDerivation and_l(GcDerivation premise, std::size_t pos) {
  const Context& pg = premise.sequent.gamma;
  if (pos + 1 >= pg.size())
    throw CheckError(CheckError::Kind::BadIndex, {}, "and_l: position out of range");
  Sequent s{replace1(erase_at(pg, pos + 1), pos, Formula::conj(pg[pos], pg[pos + 1])),
            premise.sequent.delta};
  return make_node(GcRule::AndL, pos, 0, std::nullopt, {std::move(premise)}, std::move(s));
}

GcDerivation and_r(GcDerivation left, GcDerivation right, std::size_t pos) {
  const Context& ld = left.sequent.delta;
  const Context& rd = right.sequent.delta;
  if (pos >= ld.size() || pos >= rd.size())
    throw CheckError(CheckError::Kind::BadIndex, {}, "and_r: position out of range");
  Sequent s{left.sequent.gamma, replace1(ld, pos, Formula::conj(ld[pos], rd[pos]))};
  return make_node(GcRule::AndR, pos, 0, std::nullopt, {std::move(left), std::move(right)},
                   std::move(s));
}

GcDerivation or_l(GcDerivation left, GcDerivation right, std::size_t pos) {
  const Context& lg = left.sequent.gamma;
  const Context& rg = right.sequent.gamma;
  if (pos >= lg.size() || pos >= rg.size())
    throw CheckError(CheckError::Kind::BadIndex, {}, "or_l: position out of range");
  Sequent s{replace1(lg, pos, Formula::disj(lg[pos], rg[pos])), left.sequent.delta};
  return make_node(GcRule::OrL, pos, 0, std::nullopt, {std::move(left), std::move(right)},
                   std::move(s));
}

GcDerivation or_r(GcDerivation premise, std::size_t pos) {
  const Context& pd = premise.sequent.delta;
  if (pos + 1 >= pd.size())
    throw CheckError(CheckError::Kind::BadIndex, {}, "or_r: position out of range");
  Sequent s{premise.sequent.gamma,
            replace1(erase_at(pd, pos + 1), pos, Formula::disj(pd[pos], pd[pos + 1]))};
  return make_node(GcRule::OrR, pos, 0, std::nullopt, {std::move(premise)}, std::move(s));
}

GcDerivation imp_l(GcDerivation minor, GcDerivation major, std::size_t pos) {
  // minor: G1 ++ B::G2 => D     major: G1 ++ G2 => A::D
  const Context& mg = minor.sequent.gamma;
  if (pos >= mg.size())
    throw CheckError(CheckError::Kind::BadIndex, {}, "imp_l: position out of range");
  if (major.sequent.delta.empty())
    throw CheckError(CheckError::Kind::RuleMismatch, {}, "imp_l: major premise has empty delta");
  Formula a = major.sequent.delta.front();
  Sequent s{replace1(mg, pos, Formula::impl(a, mg[pos])), minor.sequent.delta};
  return make_node(GcRule::ImpL, pos, 0, std::nullopt, {std::move(minor), std::move(major)},
                   std::move(s));
}

GcDerivation imp_r(GcDerivation premise, std::size_t pos) {
  const Context& pg = premise.sequent.gamma;
  const Context& pd = premise.sequent.delta;
  if (pg.empty())
    throw CheckError(CheckError::Kind::RuleMismatch, {}, "imp_r: premise has empty gamma");
  if (pos >= pd.size())
    throw CheckError(CheckError::Kind::BadIndex, {}, "imp_r: position out of range");
  Sequent s{Context(pg.begin() + 1, pg.end()),
            replace1(pd, pos, Formula::impl(pg.front(), pd[pos]))};
  return make_node(GcRule::ImpR, pos, 0, std::nullopt, {std::move(premise)}, std::move(s));
}

GcDerivation cut(GcDerivation left, GcDerivation right) {
  // left: G => A::D     right: A::G => D
  if (left.sequent.delta.empty() || right.sequent.gamma.empty())
    throw CheckError(CheckError::Kind::RuleMismatch, {}, "cut: premise shapes do not fit");
  Formula a = left.sequent.delta.front();
  Sequent s{left.sequent.gamma, Context(left.sequent.delta.begin() + 1, left.sequent.delta.end())};
  return make_node(GcRule::Cut, 0, 0, std::move(a), {std::move(left), std::move(right)},
                   std::move(s));
}

// ---------------------------------------------------------------------------
// Weakening
// ---------------------------------------------------------------------------

namespace {

GcDerivation weaken_rec(const GcDerivation& d, Side side, std::size_t pos, const Formula& a) {
  const bool left = side == Side::Left;
  switch (d.rule) {
    case GcRule::Gax: {
      Sequent s{left ? insert_at(d.sequent.gamma, pos, a) : d.sequent.gamma,
                left ? d.sequent.delta : insert_at(d.sequent.delta, pos, a)};
      std::size_t gi = d.pos + (left && pos <= d.pos ? 1 : 0);
      std::size_t di = d.pos2 + (!left && pos <= d.pos2 ? 1 : 0);
      return gax(std::move(s), gi, di);
    }
    case GcRule::GBot: {
      Sequent s{left ? insert_at(d.sequent.gamma, pos, a) : d.sequent.gamma,
                left ? d.sequent.delta : insert_at(d.sequent.delta, pos, a)};
      std::size_t gi = d.pos + (left && pos <= d.pos ? 1 : 0);
      return gbot(std::move(s), gi);
    }
    case GcRule::AndL: {
      std::size_t ppos = left ? (pos <= d.pos ? pos : pos + 1) : pos;
      std::size_t idx = d.pos + (left && pos <= d.pos ? 1 : 0);
      return and_l(weaken_rec(*d.premises[0], side, ppos, a), idx);
    }
    case GcRule::OrR: {
      std::size_t ppos = !left ? (pos <= d.pos ? pos : pos + 1) : pos;
      std::size_t idx = d.pos + (!left && pos <= d.pos ? 1 : 0);
      return or_r(weaken_rec(*d.premises[0], side, ppos, a), idx);
    }
    case GcRule::OrL: {
      std::size_t idx = d.pos + (left && pos <= d.pos ? 1 : 0);
      return or_l(weaken_rec(*d.premises[0], side, pos, a),
                  weaken_rec(*d.premises[1], side, pos, a), idx);
    }
    case GcRule::AndR: {
      std::size_t idx = d.pos + (!left && pos <= d.pos ? 1 : 0);
      return and_r(weaken_rec(*d.premises[0], side, pos, a),
                   weaken_rec(*d.premises[1], side, pos, a), idx);
    }
    case GcRule::ImpL: {
      std::size_t idx = d.pos + (left && pos <= d.pos ? 1 : 0);
      std::size_t minor_pos = pos;
      std::size_t major_pos = left ? (pos <= d.pos ? pos : pos - 1) : pos + 1;
      return imp_l(weaken_rec(*d.premises[0], side, minor_pos, a),
                   weaken_rec(*d.premises[1], side, major_pos, a), idx);
    }
    case GcRule::ImpR: {
      std::size_t idx = d.pos + (!left && pos <= d.pos ? 1 : 0);
      std::size_t ppos = left ? pos + 1 : pos;
      return imp_r(weaken_rec(*d.premises[0], side, ppos, a), idx);
    }
    case GcRule::Cut: {
      std::size_t p1 = left ? pos : pos + 1;
      std::size_t p2 = left ? pos + 1 : pos;
      return cut(weaken_rec(*d.premises[0], side, p1, a),
                 weaken_rec(*d.premises[1], side, p2, a));
    }
  }
  throw PreconditionError("unreachable");
}

}  // namespace

GcDerivation gc_weaken(const GcDerivation& d, Side side, std::size_t position,
                       const Formula& a) {
  try {
    check_gc(d);
  } catch (const CheckError& e) {
    throw PreconditionError(std::string("gc_weaken input does not check: ") + e.what());
  }
  const std::size_t limit =
      side == Side::Left ? d.sequent.gamma.size() : d.sequent.delta.size();
  if (position > limit) throw PreconditionError("gc_weaken position out of range");
  return weaken_rec(d, side, position, a);
}

// ---------------------------------------------------------------------------
// Translations
// ---------------------------------------------------------------------------

Formula big_or(const Context& delta) {
  Formula out = Formula::bot();
  for (auto it = delta.rbegin(); it != delta.rend(); ++it)
    out = Formula::disj(*it, std::move(out));
  return out;
}

Context neg_list(const Context& delta) {
  Context out;
  out.reserve(delta.size());
  for (const Formula& f : delta) out.push_back(Formula::neg(f));
  return out;
}

namespace {

constexpr std::size_t kSubst = static_cast<std::size_t>(-1);

// Replaces selected hypotheses of p (positions marked kSubst in emb) by
// derivations of them over `target`, transporting everything else along
// emb. p must conclude bot.
NcDerivation substitute_hyps(const NcDerivation& p, const Context& target,
                             const std::vector<std::size_t>& emb,
                             std::vector<std::pair<std::size_t, NcDerivation>> hyps) {
  const std::size_t k = hyps.size();
  Context extended;
  extended.reserve(k + target.size());
  for (const auto& [src, deriv] : hyps) extended.push_back(p.context[src]);
  extended.insert(extended.end(), target.begin(), target.end());

  std::vector<std::size_t> full(emb.size(), 0);
  for (std::size_t i = 0; i < emb.size(); ++i)
    full[i] = emb[i] == kSubst ? kSubst : emb[i] + k;
  for (std::size_t j = 0; j < k; ++j) full[hyps[j].first] = j;

  NcDerivation w = nc_weaken(p, extended, full);
  for (std::size_t j = 0; j < k; ++j) w = imp_i(std::move(w));
  for (std::size_t j = k; j-- > 0;) w = imp_e(std::move(w), std::move(hyps[j].second));
  return w;
}

// Nc context of the negative translation: G ++ ~D.
Context neg_context(const Sequent& s) {
  Context out = s.gamma;
  Context nd = neg_list(s.delta);
  out.insert(out.end(), nd.begin(), nd.end());
  return out;
}

std::vector<std::size_t> iota(std::size_t count, std::size_t start = 0) {
  std::vector<std::size_t> v(count);
  for (std::size_t i = 0; i < count; ++i) v[i] = start + i;
  return v;
}

NcDerivation g_to_nc_neg_rec(const GcDerivation& d) {
  const Context target = neg_context(d.sequent);
  const std::size_t n = d.sequent.gamma.size();
  const std::size_t m = d.sequent.delta.size();

  switch (d.rule) {
    case GcRule::Gax:
      return imp_e(nax(target, n + d.pos2), nax(target, d.pos));
    case GcRule::GBot:
      return nax(target, d.pos);
    case GcRule::AndL: {
      NcDerivation rec = g_to_nc_neg_rec(*d.premises[0]);
      // Premise context: A and B sit at pos, pos+1; everything after shifts.
      std::vector<std::size_t> emb(n + m + 1);
      for (std::size_t i = 0; i < emb.size(); ++i)
        emb[i] = i < d.pos ? i : i - 1;
      emb[d.pos] = kSubst;
      emb[d.pos + 1] = kSubst;
      NcDerivation both = nax(target, d.pos);
      return substitute_hyps(rec, target, emb,
                             {{d.pos, and_e1(both)}, {d.pos + 1, and_e2(both)}});
    }
    case GcRule::OrL: {
      const Formula& f = d.sequent.gamma[d.pos];
      NcDerivation rec1 = g_to_nc_neg_rec(*d.premises[0]);
      NcDerivation rec2 = g_to_nc_neg_rec(*d.premises[1]);
      auto branch = [&](const NcDerivation& rec, const Formula& hyp) {
        Context extended = cons(hyp, target);
        std::vector<std::size_t> emb(n + m);
        for (std::size_t i = 0; i < emb.size(); ++i) emb[i] = i + 1;
        emb[d.pos] = 0;
        return nc_weaken(rec, extended, emb);
      };
      return or_e(nax(target, d.pos), branch(rec1, f.lhs()), branch(rec2, f.rhs()));
    }
    case GcRule::ImpL: {
      const Formula& f = d.sequent.gamma[d.pos];
      NcDerivation rec1 = g_to_nc_neg_rec(*d.premises[0]);  // G1++B::G2 ++ ~D |- bot
      NcDerivation rec2 = g_to_nc_neg_rec(*d.premises[1]);  // G1++G2 ++ ~A::~D |- bot
      // A classically, from the second premise.
      Context na_ctx = cons(Formula::neg(f.lhs()), target);
      std::vector<std::size_t> emb2(n + m);
      for (std::size_t i = 0; i < n - 1; ++i) emb2[i] = i < d.pos ? i + 1 : i + 2;
      emb2[n - 1] = 0;  // ~A
      for (std::size_t j = 0; j < m; ++j) emb2[n + j] = n + 1 + j;
      NcDerivation a = bot_c(nc_weaken(rec2, na_ctx, emb2));
      NcDerivation b = imp_e(nax(target, d.pos), std::move(a));
      // Substitute B into the first premise.
      std::vector<std::size_t> emb1 = iota(n + m);
      emb1[d.pos] = kSubst;
      return substitute_hyps(rec1, target, emb1, {{d.pos, std::move(b)}});
    }
    case GcRule::AndR: {
      const Formula& f = d.sequent.delta[d.pos];
      NcDerivation rec1 = g_to_nc_neg_rec(*d.premises[0]);
      NcDerivation rec2 = g_to_nc_neg_rec(*d.premises[1]);
      auto classical = [&](const NcDerivation& rec, const Formula& part) {
        Context extended = cons(Formula::neg(part), target);
        std::vector<std::size_t> emb(n + m);
        for (std::size_t i = 0; i < emb.size(); ++i) emb[i] = i + 1;
        emb[n + d.pos] = 0;
        return bot_c(nc_weaken(rec, extended, emb));
      };
      NcDerivation both = and_i(classical(rec1, f.lhs()), classical(rec2, f.rhs()));
      return imp_e(nax(target, n + d.pos), std::move(both));
    }
    case GcRule::OrR: {
      const Formula& f = d.sequent.delta[d.pos];
      NcDerivation rec = g_to_nc_neg_rec(*d.premises[0]);
      auto neg_inj = [&](bool first) {
        const Formula& part = first ? f.lhs() : f.rhs();
        Context inner = cons(part, target);
        NcDerivation disj = first ? or_i1(nax(inner, 0), f.rhs())
                                  : or_i2(f.lhs(), nax(inner, 0));
        return imp_i(imp_e(nax(inner, 1 + n + d.pos), std::move(disj)));
      };
      std::vector<std::size_t> emb(n + m + 1);
      for (std::size_t i = 0; i < emb.size(); ++i)
        emb[i] = i < n + d.pos ? i : i - 1;
      emb[n + d.pos] = kSubst;
      emb[n + d.pos + 1] = kSubst;
      return substitute_hyps(rec, target, emb,
                             {{n + d.pos, neg_inj(true)}, {n + d.pos + 1, neg_inj(false)}});
    }
    case GcRule::ImpR: {
      const Formula& f = d.sequent.delta[d.pos];
      NcDerivation rec = g_to_nc_neg_rec(*d.premises[0]);  // A::G ++ ~D1++~B::~D2 |- bot
      Context inner = cons(f.lhs(), target);
      Context extended = cons(Formula::neg(f.rhs()), inner);
      std::vector<std::size_t> emb(n + m + 1);
      emb[0] = 1;  // A
      for (std::size_t i = 1; i <= n; ++i) emb[i] = i + 1;
      for (std::size_t j = 0; j < m; ++j) emb[n + 1 + j] = n + 2 + j;
      emb[n + 1 + d.pos] = 0;  // ~B
      NcDerivation body = imp_i(bot_c(nc_weaken(rec, extended, emb)));
      return imp_e(nax(target, n + d.pos), std::move(body));
    }
    case GcRule::Cut: {
      const Formula& a = *d.cut_formula;
      NcDerivation rec1 = g_to_nc_neg_rec(*d.premises[0]);  // G ++ ~A::~D |- bot
      NcDerivation rec2 = g_to_nc_neg_rec(*d.premises[1]);  // A::G ++ ~D |- bot
      Context na_ctx = cons(Formula::neg(a), target);
      std::vector<std::size_t> emb1(n + m + 1);
      for (std::size_t i = 0; i < n; ++i) emb1[i] = i + 1;
      emb1[n] = 0;
      for (std::size_t j = 0; j < m; ++j) emb1[n + 1 + j] = n + 1 + j;
      NcDerivation a_deriv = bot_c(nc_weaken(rec1, na_ctx, emb1));
      // rec2's context is exactly A::target already.
      NcDerivation not_a = imp_i(rec2);
      return imp_e(std::move(not_a), std::move(a_deriv));
    }
  }
  throw PreconditionError("unreachable");
}

Formula big_or_suffix(const Context& delta, std::size_t from) {
  return big_or(Context(delta.begin() + static_cast<std::ptrdiff_t>(from), delta.end()));
}

}  // namespace

NcDerivation g_to_nc_neg(const GcDerivation& d) {
  try {
    check_gc(d);
  } catch (const CheckError& e) {
    throw PreconditionError(std::string("g_to_nc_neg input does not check: ") + e.what());
  }
  return g_to_nc_neg_rec(d);
}

NcDerivation g_to_nc(const GcDerivation& d) {
  try {
    check_gc(d);
  } catch (const CheckError& e) {
    throw PreconditionError(std::string("g_to_nc input does not check: ") + e.what());
  }
  const Context& gamma = d.sequent.gamma;
  const Context& delta = d.sequent.delta;
  const std::size_t n = gamma.size();
  const std::size_t m = delta.size();
  const Formula goal = big_or(delta);

  NcDerivation t = g_to_nc_neg_rec(d);
  const Context k_ctx = cons(Formula::neg(goal), gamma);

  // ~delta[j] over k_ctx: inject delta[j] into the big disjunction and hit
  // the assumed negation.
  std::vector<std::pair<std::size_t, NcDerivation>> hyps;
  hyps.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    Context inner = cons(delta[j], k_ctx);
    NcDerivation lifted = or_i1(nax(inner, 0), big_or_suffix(delta, j + 1));
    for (std::size_t u = j; u-- > 0;) lifted = or_i2(delta[u], std::move(lifted));
    hyps.emplace_back(n + j, imp_i(imp_e(nax(inner, 1), std::move(lifted))));
  }

  std::vector<std::size_t> emb(n + m, kSubst);
  for (std::size_t i = 0; i < n; ++i) emb[i] = i + 1;
  NcDerivation body = substitute_hyps(t, k_ctx, emb, std::move(hyps));
  return bot_c(std::move(body));
}

namespace {

GcDerivation nc_to_g_rec(const NcDerivation& d) {
  switch (d.rule) {
    case NcRule::Nax:
      return gax(Sequent{d.context, {d.formula}}, d.index, 0);
    case NcRule::ImpI:
      return imp_r(nc_to_g_rec(*d.premises[0]), 0);
    case NcRule::AndI:
      return and_r(nc_to_g_rec(*d.premises[0]), nc_to_g_rec(*d.premises[1]), 0);
    case NcRule::OrI1: {
      GcDerivation w = weaken_rec(nc_to_g_rec(*d.premises[0]), Side::Right, 1, d.formula.rhs());
      return or_r(std::move(w), 0);
    }
    case NcRule::OrI2: {
      GcDerivation w = weaken_rec(nc_to_g_rec(*d.premises[0]), Side::Right, 0, d.formula.lhs());
      return or_r(std::move(w), 0);
    }
    case NcRule::ImpE: {
      GcDerivation left = weaken_rec(nc_to_g_rec(*d.premises[0]), Side::Right, 1, d.formula);
      GcDerivation minor = gax(Sequent{cons(d.formula, d.context), {d.formula}}, 0, 0);
      GcDerivation major =
          weaken_rec(nc_to_g_rec(*d.premises[1]), Side::Right, 1, d.formula);
      GcDerivation right = imp_l(std::move(minor), std::move(major), 0);
      return cut(std::move(left), std::move(right));
    }
    case NcRule::AndE1: {
      GcDerivation left = weaken_rec(nc_to_g_rec(*d.premises[0]), Side::Right, 1, d.formula);
      Context pg = cons(d.formula, cons(d.rule_formulas[0], d.context));
      GcDerivation right = and_l(gax(Sequent{pg, {d.formula}}, 0, 0), 0);
      return cut(std::move(left), std::move(right));
    }
    case NcRule::AndE2: {
      GcDerivation left = weaken_rec(nc_to_g_rec(*d.premises[0]), Side::Right, 1, d.formula);
      Context pg = cons(d.rule_formulas[0], cons(d.formula, d.context));
      GcDerivation right = and_l(gax(Sequent{pg, {d.formula}}, 1, 0), 0);
      return cut(std::move(left), std::move(right));
    }
    case NcRule::OrE: {
      GcDerivation left = weaken_rec(nc_to_g_rec(*d.premises[0]), Side::Right, 1, d.formula);
      GcDerivation right = or_l(nc_to_g_rec(*d.premises[1]), nc_to_g_rec(*d.premises[2]), 0);
      return cut(std::move(left), std::move(right));
    }
    case NcRule::BotC: {
      const Formula& a = d.formula;
      const Formula na = Formula::neg(a);
      // G => [~A, A] by ImpR over an axiom.
      GcDerivation p1 =
          imp_r(gax(Sequent{cons(a, d.context), {Formula::bot(), a}}, 0, 1), 0);
      // ~A::G => [A] from the premise, replacing bot on the right via a
      // cut with the falsum rule.
      GcDerivation rec = nc_to_g_rec(*d.premises[0]);  // ~A::G => [bot]
      GcDerivation recw = weaken_rec(rec, Side::Right, 1, a);
      GcDerivation fals = gbot(Sequent{cons(Formula::bot(), cons(na, d.context)), {a}}, 0);
      GcDerivation p2 = cut(std::move(recw), std::move(fals));
      return cut(std::move(p1), std::move(p2));
    }
  }
  throw PreconditionError("unreachable");
}

}  // namespace

GcDerivation nc_to_g(const NcDerivation& d) {
  try {
    check_nc(d);
  } catch (const CheckError& e) {
    throw PreconditionError(std::string("nc_to_g input does not check: ") + e.what());
  }
  return nc_to_g_rec(d);
}

}  // namespace propkit
