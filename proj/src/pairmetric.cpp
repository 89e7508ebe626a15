#include "sympair/pairmetric.hpp"

#include <algorithm>
#include <limits>
#include <thread>

namespace sympair {

namespace {

void require_pairable(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::LengthTooShort, "symbol-pair words need length >= 2");
}

void require_same_length(std::span<const Symbol> x, std::span<const Symbol> y) {
  if (x.size() != y.size()) throw Error(ErrorKind::RingMismatch, "words of different lengths");
  require_pairable(x.size());
}

// Running weights of one codeword, updated coordinate by coordinate.
class IncrementalWeights {
 public:
  IncrementalWeights(int length, int width)
      : width_(width), nonzero_coords_(static_cast<std::size_t>(length), 0) {}

  int hamming() const noexcept { return hamming_; }
  int pair() const noexcept { return pair_; }

  void set_coord(int col, int before, int after) {
    if ((before == 0) == (after == 0)) return;
    const int t = col / width_;
    int& count = nonzero_coords_[static_cast<std::size_t>(t)];
    const bool was = count > 0;
    count += after != 0 ? 1 : -1;
    const bool now = count > 0;
    if (was != now) flip(t, now);
  }

 private:
  bool nz(int t) const { return nonzero_coords_[static_cast<std::size_t>(t)] > 0; }

  void flip(int t, bool now) {
    const int N = static_cast<int>(nonzero_coords_.size());
    const int left = (t + N - 1) % N;
    const int right = (t + 1) % N;
    // pair (left, t) and pair (t, right); for N = 2 they are distinct pairs
    // that share both symbols.
    const bool left_other = nz(left);
    const bool right_other = nz(right);
    const int delta = now ? 1 : -1;
    hamming_ += delta;
    if (!left_other) pair_ += delta;
    if (!right_other) pair_ += delta;
  }

  int width_;
  std::vector<int> nonzero_coords_;
  int hamming_ = 0;
  int pair_ = 0;
};

struct SparseRow {
  std::vector<std::pair<int, int>> entries;
};

struct ChunkBest {
  int sp = std::numeric_limits<int>::max();
  std::uint64_t sp_index = 0;
  int h = std::numeric_limits<int>::max();
  std::uint64_t h_index = 0;
};

ChunkBest scan_range(const RowSpace& basis, const std::vector<SparseRow>& sparse, int length, int width,
                     std::uint64_t begin, std::uint64_t end) {
  const int p = basis.p();
  std::vector<Coord> word = std::vector<Coord>(static_cast<std::size_t>(basis.cols()), 0);
  IncrementalWeights weights(length, width);
  CodewordWalker walker(p, basis.rank(), begin);
  for (std::size_t r = 0; r < sparse.size(); ++r) {
    const int digit = walker.digits()[r];
    for (int rep = 0; rep < digit; ++rep) {
      for (auto [col, val] : sparse[r].entries) {
        const int before = word[static_cast<std::size_t>(col)];
        const int after = (before + val) % p;
        word[static_cast<std::size_t>(col)] = static_cast<Coord>(after);
        weights.set_coord(col, before, after);
      }
    }
  }
  ChunkBest best;
  auto add = [&](int r) {
    for (auto [col, val] : sparse[static_cast<std::size_t>(r)].entries) {
      const int before = word[static_cast<std::size_t>(col)];
      const int after = (before + val) % p;
      word[static_cast<std::size_t>(col)] = static_cast<Coord>(after);
      weights.set_coord(col, before, after);
    }
  };
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    if (weights.hamming() > 0) {
      if (weights.pair() < best.sp) {
        best.sp = weights.pair();
        best.sp_index = idx;
      }
      if (weights.hamming() < best.h) {
        best.h = weights.hamming();
        best.h_index = idx;
      }
    }
    if (idx + 1 < end) walker.advance(add);
  }
  return best;
}

std::vector<Symbol> coord_symbols(const QuotientRing& ring, std::span<const Coord> coords) {
  return symbols(from_coordinates(ring, std::vector<Coord>(coords.begin(), coords.end())));
}

}  // namespace

PairVector pair_vector(std::span<const Symbol> x) {
  require_pairable(x.size());
  PairVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = {x[i], x[(i + 1) % x.size()]};
  return out;
}

int wt_H(std::span<const Symbol> x) {
  return static_cast<int>(std::count_if(x.begin(), x.end(), [](Symbol s) { return s != 0; }));
}

int wt_sp(std::span<const Symbol> x) {
  require_pairable(x.size());
  int count = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0 || x[(i + 1) % x.size()] != 0) ++count;
  }
  return count;
}

int d_H(std::span<const Symbol> x, std::span<const Symbol> y) {
  require_same_length(x, y);
  int count = 0;
  for (std::size_t i = 0; i < x.size(); ++i) count += x[i] != y[i];
  return count;
}

int d_sp(std::span<const Symbol> x, std::span<const Symbol> y) {
  require_same_length(x, y);
  const PairVector px = pair_vector(x), py = pair_vector(y);
  int count = 0;
  for (std::size_t i = 0; i < px.size(); ++i) count += px[i] != py[i];
  return count;
}

int wt_H(const QPoly& f) { return f.term_count(); }

int wt_sp(const QPoly& f) { return wt_sp(symbols(f)); }

BlockDecomposition block_decomposition(std::span<const Symbol> x, std::span<const Symbol> y) {
  require_same_length(x, y);
  const std::size_t N = x.size();
  BlockDecomposition out;
  out.d_H = d_H(x, y);
  if (out.d_H == 0 || out.d_H == static_cast<int>(N)) {
    throw Error(ErrorKind::DegenerateInput, "block decomposition needs 0 < d_H < N");
  }
  // A run starts at every differing index whose cyclic predecessor agrees.
  for (std::size_t i = 0; i < N; ++i) {
    const std::size_t prev = (i + N - 1) % N;
    if (x[i] != y[i] && x[prev] == y[prev]) ++out.L;
  }
  out.d_sp = d_sp(x, y);
  return out;
}

std::string to_string(DistanceMethod method) {
  switch (method) {
    case DistanceMethod::ClosedForm: return "closed-form";
    case DistanceMethod::Exhaustive: return "exhaustive";
    case DistanceMethod::UpperBound: return "upper-bound";
  }
  return "unknown";
}

DistanceReport min_distance_brute(const ConstacyclicCode& code, Metric metric, const OracleOptions& options) {
  const QuotientRing& ring = code.ring();
  const RowSpace& basis = code.basis();
  const int N = ring.length();
  const int width = ring.symbol_width();
  DistanceReport report;

  if (basis.rank() == 0) {
    report.method = DistanceMethod::Exhaustive;
    report.examined = 1;
    return report;
  }

  auto finish = [&](const std::vector<Coord>& sp_word, const std::vector<Coord>& h_word) {
    const std::vector<Coord>& chosen = metric == Metric::Pair ? sp_word : h_word;
    QPoly witness = from_coordinates(ring, chosen);
    const auto sym = symbols(witness);
    const int h = wt_H(sym);
    if (h > 0 && h < N) {
      const std::vector<Symbol> zero(sym.size(), 0);
      report.L = block_decomposition(sym, zero).L;
    }
    report.witness = std::move(witness);
  };

  const auto total = code.size();
  if (total && *total <= options.budget) {
    std::vector<SparseRow> sparse(basis.rows().size());
    for (std::size_t r = 0; r < sparse.size(); ++r) {
      for (int c = 0; c < basis.cols(); ++c) {
        if (basis.rows()[r][c] != 0) sparse[r].entries.emplace_back(c, basis.rows()[r][c]);
      }
    }
    unsigned threads = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    const std::uint64_t min_chunk = 1 << 14;
    threads = static_cast<unsigned>(std::clamp<std::uint64_t>(*total / min_chunk, 1, threads));
    std::vector<ChunkBest> results(threads);
    {
      std::vector<std::jthread> workers;
      for (unsigned w = 0; w < threads; ++w) {
        const std::uint64_t begin = *total * w / threads;
        const std::uint64_t end = *total * (w + 1) / threads;
        workers.emplace_back([&, w, begin, end] { results[w] = scan_range(basis, sparse, N, width, begin, end); });
      }
    }
    ChunkBest best;
    for (const auto& r : results) {
      if (r.sp < best.sp || (r.sp == best.sp && r.sp_index < best.sp_index)) {
        best.sp = r.sp;
        best.sp_index = r.sp_index;
      }
      if (r.h < best.h || (r.h == best.h && r.h_index < best.h_index)) {
        best.h = r.h;
        best.h_index = r.h_index;
      }
    }
    report.method = DistanceMethod::Exhaustive;
    report.d_sp = best.sp;
    report.d_H = best.h;
    report.examined = *total;
    finish(codeword_at(code, best.sp_index), codeword_at(code, best.h_index));
    return report;
  }

  // Too large to enumerate: the best of the generators, their scalar and shift
  // images through the basis rows, and random codewords.
  report.method = DistanceMethod::UpperBound;
  report.d_sp = std::numeric_limits<int>::max();
  report.d_H = std::numeric_limits<int>::max();
  std::vector<Coord> sp_word, h_word;
  auto consider = [&](const std::vector<Coord>& word) {
    const auto sym = coord_symbols(ring, word);
    const int h = wt_H(sym);
    ++report.examined;
    if (h == 0) return;
    const int sp = wt_sp(sym);
    if (sp < report.d_sp) {
      report.d_sp = sp;
      sp_word = word;
    }
    if (h < report.d_H) {
      report.d_H = h;
      h_word = word;
    }
  };
  for (const auto& g : code.generators()) consider(to_coordinates(g));
  for (const auto& row : basis.rows()) consider(std::vector<Coord>(row.begin(), row.end()));
  std::mt19937_64 rng(options.seed);
  for (std::uint64_t s = 0; s < options.samples; ++s) consider(random_codeword(code, rng));
  finish(sp_word, h_word);
  return report;
}

nlohmann::json to_json(const DistanceReport& report) {
  nlohmann::json j;
  j["d_sp"] = report.d_sp;
  j["d_H"] = report.d_H;
  j["L"] = report.L ? nlohmann::json(*report.L) : nlohmann::json(nullptr);
  j["method"] = to_string(report.method);
  j["witness"] = report.witness ? nlohmann::json(format_qpoly(*report.witness)) : nlohmann::json(nullptr);
  j["examined"] = report.examined;
  return j;
}

}  // namespace sympair
