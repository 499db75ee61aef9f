#include "toricgp/groebner/buchberger.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "toricgp/errors.hpp"

namespace toricgp {

namespace {

struct PairKey {
  std::int64_t degree;
  std::uint32_t i, j;

  friend auto operator<=>(const PairKey &, const PairKey &) = default;
};

// Active leading monomials bucketed by their first support variable.
class DivisorIndex {
public:
  explicit DivisorIndex(std::size_t nvars) : buckets_(nvars) {}

  void insert(std::uint32_t id, const Monomial &lead) {
    const std::size_t v = first_var(lead);
    (v == npos ? units_ : buckets_[v]).push_back(id);
  }

  void erase(std::uint32_t id, const Monomial &lead) {
    const std::size_t v = first_var(lead);
    auto &b = v == npos ? units_ : buckets_[v];
    b.erase(std::find(b.begin(), b.end(), id));
  }

  template <class Elems>
  std::optional<std::uint32_t> find(const Monomial &m,
                                    const Elems &elems) const {
    if (!units_.empty())
      return units_.front();
    const std::uint64_t mm = m.support_mask();
    for (std::size_t v = 0; v < m.dim(); ++v) {
      if (m[v] == 0)
        continue;
      for (std::uint32_t id : buckets_[v]) {
        const auto &e = elems[id];
        if ((e.mask & ~mm) == 0 && e.lead.divides(m))
          return id;
      }
    }
    return std::nullopt;
  }

private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  static std::size_t first_var(const Monomial &m) {
    for (std::size_t v = 0; v < m.dim(); ++v)
      if (m[v] != 0)
        return v;
    return npos;
  }

  std::vector<std::vector<std::uint32_t>> buckets_;
  std::vector<std::uint32_t> units_;
};

// x^lead - x^tail.
struct BinomialBody {
  Monomial tail;
};

// Monic, terms in decreasing order, lead first.
struct GeneralBody {
  std::vector<Term> terms;
};

template <class Body> struct Elem {
  Monomial lead;
  std::uint64_t mask = 0;
  bool active = true;
  Body body;
};

std::vector<Term> merge_subtract(const std::vector<Term> &a,
                                 const std::vector<Term> &b,
                                 const MonomialOrder &order) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    Cmp c = i == a.size()   ? Cmp::Less
            : j == b.size() ? Cmp::Greater
                            : order.compare(a[i].monomial, b[j].monomial);
    if (c == Cmp::Greater) {
      out.push_back(a[i++]);
    } else if (c == Cmp::Less) {
      out.push_back({b[j].monomial, -b[j].coeff});
      ++j;
    } else {
      Rational s = a[i].coeff - b[j].coeff;
      if (s != 0)
        out.push_back({a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

std::vector<Term> shifted(const std::vector<Term> &terms, const Monomial &m,
                          const Rational &c) {
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const Term &t : terms)
    out.push_back({t.monomial + m, t.coeff * c});
  return out;
}

template <class Body> struct InputOf;
template <> struct InputOf<BinomialBody> {
  using type = std::pair<Monomial, Monomial>;
};
template <> struct InputOf<GeneralBody> {
  using type = std::vector<Term>;
};

template <class Body> class Engine {
public:
  using E = Elem<Body>;
  using Input = typename InputOf<Body>::type;

  Engine(std::size_t nvars, const MonomialOrder &order,
         const BuchbergerOptions &options, BuchbergerStats &stats)
      : order_(order), options_(options), stats_(stats), index_(nvars) {}

  // Returns the reduced basis sorted by increasing lead.
  std::vector<E> run(const std::vector<Input> &inputs);

private:
  std::optional<E> reduce_input(const Input &in) const;
  std::optional<E> s_reduce(const E &a, const E &b) const;
  void tail_reduce(E &e) const;
  std::int64_t input_degree(const Input &in) const;
  std::int64_t degree(const Monomial &m) const;

  Monomial normal_monomial(Monomial m) const;
  std::vector<Term> normal_terms(std::vector<Term> p, bool keep_head) const;
  std::optional<E> make_general(std::vector<Term> p) const;
  std::optional<E> make_binomial(Monomial u, Monomial v) const;

  void add(E h);

  const MonomialOrder &order_;
  const BuchbergerOptions &options_;
  BuchbergerStats &stats_;
  DivisorIndex index_;
  std::vector<E> elems_;
  // lcm of the pair and its support mask.
  std::map<PairKey, std::pair<Monomial, std::uint64_t>> pairs_;
};

template <class Body>
Monomial Engine<Body>::normal_monomial(Monomial m) const {
  if constexpr (std::is_same_v<Body, BinomialBody>) {
    while (auto id = index_.find(m, elems_)) {
      const E &e = elems_[*id];
      m -= e.lead;
      m += e.body.tail;
    }
  }
  return m;
}

template <class Body>
std::vector<Term> Engine<Body>::normal_terms(std::vector<Term> p,
                                             bool keep_head) const {
  if constexpr (std::is_same_v<Body, GeneralBody>) {
    std::vector<Term> r;
    std::size_t head = 0;
    if (keep_head && !p.empty()) {
      r.push_back(p.front());
      head = 1;
    }
    while (head < p.size()) {
      auto id = index_.find(p[head].monomial, elems_);
      if (!id) {
        r.push_back(p[head++]);
        continue;
      }
      const E &e = elems_[*id];
      std::vector<Term> rest(p.begin() + static_cast<std::ptrdiff_t>(head),
                             p.end());
      p = merge_subtract(
          rest, shifted(e.body.terms, p[head].monomial - e.lead, p[head].coeff),
          order_);
      head = 0;
    }
    return r;
  } else {
    (void)keep_head;
    return p;
  }
}

template <class Body>
std::optional<typename Engine<Body>::E>
Engine<Body>::make_binomial(Monomial u, Monomial v) const {
  if constexpr (std::is_same_v<Body, BinomialBody>) {
    switch (order_.compare(u, v)) {
    case Cmp::Equal:
      return std::nullopt;
    case Cmp::Less:
      std::swap(u, v);
      break;
    case Cmp::Greater:
      break;
    }
    E e;
    e.mask = u.support_mask();
    e.lead = std::move(u);
    e.body.tail = std::move(v);
    return e;
  } else {
    return std::nullopt;
  }
}

template <class Body>
std::optional<typename Engine<Body>::E>
Engine<Body>::make_general(std::vector<Term> p) const {
  if constexpr (std::is_same_v<Body, GeneralBody>) {
    p = normal_terms(std::move(p), false);
    if (p.empty())
      return std::nullopt;
    const Rational inv = Rational(1) / p.front().coeff;
    for (Term &t : p)
      t.coeff *= inv;
    E e;
    e.lead = p.front().monomial;
    e.mask = e.lead.support_mask();
    e.body.terms = std::move(p);
    return e;
  } else {
    return std::nullopt;
  }
}

template <class Body>
std::int64_t Engine<Body>::degree(const Monomial &m) const {
  const auto &w = options_.weights;
  if (w.empty())
    return m.degree();
  std::int64_t d = 0;
  for (std::size_t i = 0; i < m.dim(); ++i)
    d += w[i] * m[i];
  return d;
}

template <class Body>
std::int64_t Engine<Body>::input_degree(const Input &in) const {
  if constexpr (std::is_same_v<Body, BinomialBody>) {
    return std::max(degree(in.first), degree(in.second));
  } else {
    std::int64_t d = 0;
    for (const Term &t : in)
      d = std::max(d, degree(t.monomial));
    return d;
  }
}

template <class Body>
std::optional<typename Engine<Body>::E>
Engine<Body>::reduce_input(const Input &in) const {
  if constexpr (std::is_same_v<Body, BinomialBody>)
    return make_binomial(normal_monomial(in.first), normal_monomial(in.second));
  else
    return make_general(in);
}

template <class Body>
std::optional<typename Engine<Body>::E>
Engine<Body>::s_reduce(const E &a, const E &b) const {
  const Monomial l = lcm(a.lead, b.lead);
  if constexpr (std::is_same_v<Body, BinomialBody>) {
    return make_binomial(normal_monomial(a.body.tail + (l - a.lead)),
                         normal_monomial(b.body.tail + (l - b.lead)));
  } else {
    return make_general(merge_subtract(shifted(a.body.terms, l - a.lead, 1),
                                       shifted(b.body.terms, l - b.lead, 1),
                                       order_));
  }
}

template <class Body> void Engine<Body>::tail_reduce(E &e) const {
  if constexpr (std::is_same_v<Body, BinomialBody>)
    e.body.tail = normal_monomial(std::move(e.body.tail));
  else
    e.body.terms = normal_terms(std::move(e.body.terms), true);
}

template <class Body> void Engine<Body>::add(E h) {
  if (elems_.size() >= options_.max_basis)
    throw BudgetExceeded("Groebner basis exceeded " +
                         std::to_string(options_.max_basis) + " elements");
  const auto k = static_cast<std::uint32_t>(elems_.size());
  ++stats_.elements_added;

  std::vector<std::uint32_t> active;
  for (std::uint32_t g = 0; g < k; ++g)
    if (elems_[g].active)
      active.push_back(g);

  struct Cand {
    std::uint32_t g;
    Monomial l;
    bool coprime;
  };
  std::vector<Cand> cands;
  cands.reserve(active.size());
  for (std::uint32_t g : active)
    cands.push_back({g, lcm(h.lead, elems_[g].lead),
                     h.lead.coprime(elems_[g].lead)});

  std::vector<Cand> kept;
  if (options_.chain_criterion) {
    // Gebauer-Moeller: a new lcm survives only if no other new lcm divides
    // it; coprime pairs shadow others but are never queued.
    std::vector<std::size_t> d;
    for (std::size_t c = 0; c < cands.size(); ++c) {
      bool keep = true;
      if (!cands[c].coprime) {
        for (std::size_t o = c + 1; o < cands.size() && keep; ++o)
          if (cands[o].l.divides(cands[c].l))
            keep = false;
        for (std::size_t o : d) {
          if (!keep)
            break;
          if (cands[o].l.divides(cands[c].l))
            keep = false;
        }
      }
      if (keep)
        d.push_back(c);
      else
        ++stats_.pairs_chain;
    }
    for (std::size_t c : d) {
      if (cands[c].coprime)
        ++stats_.pairs_coprime;
      else
        kept.push_back(std::move(cands[c]));
    }
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const auto &[l, l_mask] = it->second;
      if ((h.mask & ~l_mask) == 0 && h.lead.divides(l) &&
          lcm(elems_[it->first.i].lead, h.lead) != l &&
          lcm(elems_[it->first.j].lead, h.lead) != l) {
        it = pairs_.erase(it);
        ++stats_.pairs_chain;
      } else {
        ++it;
      }
    }
  } else {
    kept = std::move(cands);
  }

  for (std::uint32_t g : active) {
    if (h.lead.divides(elems_[g].lead)) {
      elems_[g].active = false;
      index_.erase(g, elems_[g].lead);
    }
  }
  for (Cand &c : kept) {
    const std::int64_t deg = degree(c.l);
    const std::uint64_t mask = c.l.support_mask();
    pairs_.emplace(PairKey{deg, c.g, k}, std::make_pair(std::move(c.l), mask));
  }
  index_.insert(k, h.lead);
  elems_.push_back(std::move(h));
}

template <class Body>
std::vector<typename Engine<Body>::E>
Engine<Body>::run(const std::vector<Input> &inputs) {
  std::vector<std::pair<std::int64_t, std::size_t>> queue;
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    const std::int64_t d = input_degree(inputs[k]);
    if (d > options_.max_degree)
      throw BudgetExceeded("input of degree " + std::to_string(d) +
                           " exceeds the degree cap " +
                           std::to_string(options_.max_degree));
    queue.emplace_back(d, k);
  }
  std::sort(queue.begin(), queue.end());
  std::size_t next = 0;

  while (next < queue.size() || !pairs_.empty()) {
    std::optional<E> h;
    if (next < queue.size() &&
        (pairs_.empty() || queue[next].first <= pairs_.begin()->first.degree)) {
      h = reduce_input(inputs[queue[next++].second]);
    } else {
      const PairKey key = pairs_.begin()->first;
      pairs_.erase(pairs_.begin());
      if (key.degree > options_.max_degree)
        throw BudgetExceeded("S-pair of degree " + std::to_string(key.degree) +
                             " exceeds the degree cap " +
                             std::to_string(options_.max_degree));
      const E &a = elems_[key.i], &b = elems_[key.j];
      if (a.lead.coprime(b.lead)) {
        ++stats_.pairs_coprime;
        continue;
      }
      ++stats_.pairs_processed;
      h = s_reduce(a, b);
      if (!h)
        ++stats_.zero_reductions;
    }
    if (h)
      add(std::move(*h));
  }

  std::vector<E> out;
  for (const E &e : elems_)
    if (e.active)
      out.push_back(e);
  for (E &e : out)
    tail_reduce(e);
  std::sort(out.begin(), out.end(), [&](const E &a, const E &b) {
    return order_.compare(a.lead, b.lead) == Cmp::Less;
  });
  return out;
}

void check_options(std::size_t nvars, const MonomialOrder &order,
                   const BuchbergerOptions &options) {
  if (!order.is_total())
    throw InvalidArgument("Buchberger needs a total monomial order");
  if (!options.weights.empty()) {
    if (options.weights.size() != nvars)
      throw DimensionMismatch("one weight per variable required");
    for (std::int64_t w : options.weights)
      if (w <= 0)
        throw InvalidArgument("variable weights must be positive");
  }
}

GroebnerBasis finish(std::size_t nvars, const MonomialOrder &order,
                     std::vector<GbElement> elements) {
  GroebnerBasis g;
  g.elements = std::move(elements);
  g.order = order;
  g.reduced = true;
  g.nvars = nvars;
  return g;
}

GroebnerBasis run_binomial(std::size_t nvars,
                           const std::vector<std::pair<Monomial, Monomial>> &gens,
                           const MonomialOrder &order,
                           const BuchbergerOptions &options,
                           BuchbergerStats &stats) {
  stats.binomial_path = true;
  Engine<BinomialBody> engine(nvars, order, options, stats);
  std::vector<GbElement> elements;
  for (auto &e : engine.run(gens)) {
    GbElement g{Polynomial::binomial(e.lead, e.body.tail), e.lead};
    elements.push_back(std::move(g));
  }
  return finish(nvars, order, std::move(elements));
}

} // namespace

GroebnerBasis buchberger(const std::vector<Polynomial> &gens,
                         const MonomialOrder &order,
                         const BuchbergerOptions &options,
                         BuchbergerStats *stats) {
  BuchbergerStats local;
  BuchbergerStats &st = stats ? *stats : local;
  st = {};
  std::size_t nvars = gens.empty() ? 0 : gens.front().nvars();
  for (const Polynomial &p : gens)
    if (p.nvars() != nvars)
      throw DimensionMismatch("generators over different rings");
  check_options(nvars, order, options);

  const bool binomial =
      !options.force_general &&
      std::all_of(gens.begin(), gens.end(), [](const Polynomial &p) {
        return p.is_zero() || p.is_binomial();
      });
  if (binomial) {
    std::vector<std::pair<Monomial, Monomial>> pairs;
    for (const Polynomial &p : gens) {
      if (p.is_zero())
        continue;
      auto it = p.terms().begin();
      pairs.emplace_back(it->first, std::next(it)->first);
    }
    return run_binomial(nvars, pairs, order, options, st);
  }

  std::vector<std::vector<Term>> inputs;
  for (const Polynomial &p : gens)
    if (!p.is_zero())
      inputs.push_back(p.sorted_terms(order));
  Engine<GeneralBody> engine(nvars, order, options, st);
  std::vector<GbElement> elements;
  for (auto &e : engine.run(inputs)) {
    Polynomial p(nvars);
    for (const Term &t : e.body.terms)
      p.add_term(t.monomial, t.coeff);
    elements.push_back({std::move(p), e.lead});
  }
  return finish(nvars, order, std::move(elements));
}

GroebnerBasis buchberger_binomial(std::size_t nvars,
                                  const std::vector<std::pair<Monomial, Monomial>> &gens,
                                  const MonomialOrder &order,
                                  const BuchbergerOptions &options,
                                  BuchbergerStats *stats) {
  BuchbergerStats local;
  BuchbergerStats &st = stats ? *stats : local;
  st = {};
  check_options(nvars, order, options);
  for (const auto &[u, v] : gens)
    if (u.dim() != nvars || v.dim() != nvars)
      throw DimensionMismatch("binomial generator of wrong dimension");
  if (options.force_general) {
    std::vector<Polynomial> polys;
    for (const auto &[u, v] : gens)
      if (u != v)
        polys.push_back(Polynomial::binomial(u, v));
    BuchbergerOptions o = options;
    GroebnerBasis g = buchberger(polys, order, o, &st);
    g.nvars = nvars;
    return g;
  }
  return run_binomial(nvars, gens, order, options, st);
}

} // namespace toricgp
