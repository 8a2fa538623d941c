#include "dessinum/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace dessinum {

namespace {

struct Multiset {
  std::vector<Weight> values;  // distinct, ascending
  std::vector<int> counts;
  Weight total = 0;
  int parts = 0;

  explicit Multiset(const Partition& p) {
    for (auto it = p.parts().rbegin(); it != p.parts().rend(); ++it) {
      if (values.empty() || values.back() != *it) {
        values.push_back(*it);
        counts.push_back(0);
      }
      ++counts.back();
    }
    total = p.total();
    parts = static_cast<int>(p.count());
  }

  void take(std::size_t i) {
    --counts[i];
    total -= values[i];
    --parts;
  }
  void put(std::size_t i) {
    ++counts[i];
    total += values[i];
    ++parts;
  }
};

struct Task {
  std::size_t root;   // index of the root degree among black values
  Weight w0;          // root edge weight
  std::size_t child;  // index of the first white degree
};

// Depth-first construction of edge-rooted Dyck words. Each rooted tree is
// produced once; a word is kept only if no other rooting gives a smaller code.
class Search {
 public:
  Search(const Passport& passport, std::size_t limit) : limit_(limit) {
    side_.emplace_back(passport.black());
    side_.emplace_back(passport.white());
  }

  std::vector<Task> tasks() const {
    std::vector<Task> out;
    const Weight wmax = std::min(side_[0].values.front(), side_[1].values.front());
    for (std::size_t i = 0; i < side_[0].values.size(); ++i) {
      for (Weight w0 = 1; w0 <= std::min(side_[0].values[i], wmax); ++w0) {
        for (std::size_t j = 0; j < side_[1].values.size(); ++j) {
          if (side_[1].values[j] >= w0) out.push_back({i, w0, j});
        }
      }
    }
    return out;
  }

  void run(const Task& task) {
    w0_ = task.w0;
    const Weight dr = side_[0].values[task.root];
    const Weight dc = side_[1].values[task.child];
    side_[0].take(task.root);
    side_[1].take(task.child);
    push({0, dr - w0_, 0});
    push({1, dc - w0_, w0_});
    word_.push_back(Token{w0_, false});
    if (feasible()) step();
    word_.clear();
    pop();
    pop();
    side_[0].put(task.root);
    side_[1].put(task.child);
  }

  bool full() const { return limit_ > 0 && found_.size() >= limit_; }
  std::vector<TreeClass>& found() { return found_; }

 private:
  struct Open {
    int color;
    Weight residual;
    Weight entry;
  };

  void push(const Open& o) {
    open_.push_back(o);
    open_residual_[o.color] += o.residual;
    if (o.residual > 0) ++open_positive_;
  }
  void pop() {
    const Open& o = open_.back();
    open_residual_[o.color] -= o.residual;
    if (o.residual > 0) --open_positive_;
    open_.pop_back();
  }
  void spend(Open& o, Weight w) {
    if (o.residual > 0 && o.residual == w) --open_positive_;
    o.residual -= w;
    open_residual_[o.color] -= w;
  }
  void refund(Open& o, Weight w) {
    if (o.residual == 0 && w > 0) ++open_positive_;
    o.residual += w;
    open_residual_[o.color] += w;
  }

  bool feasible() const {
    const int vertices = side_[0].parts + side_[1].parts;
    const Weight weight = open_residual_[0] + side_[0].total;  // equals open_residual_[1] + side_[1].total
    if (vertices == 0) return weight == 0;
    if (weight < w0_ * vertices) return false;
    if (open_positive_ > vertices) return false;
    if (open_residual_[0] > side_[1].total || open_residual_[1] > side_[0].total) return false;
    return true;
  }

  void step() {
    if (full()) return;
    Open& top = open_.back();
    if (top.residual == 0) {
      if (open_.size() == 1) {
        if (side_[0].parts + side_[1].parts == 0) accept();
        return;
      }
      const Open saved = top;
      word_.push_back(Token{saved.entry, true});
      pop();
      step();
      push(saved);
      word_.pop_back();
      return;
    }
    const int oc = 1 - top.color;
    Multiset& other = side_[static_cast<std::size_t>(oc)];
    const std::size_t depth = open_.size() - 1;
    const Weight wmax = top.residual;
    for (Weight w = w0_; w <= wmax; ++w) {
      for (std::size_t i = 0; i < other.values.size(); ++i) {
        if (other.counts[i] == 0 || other.values[i] < w) continue;
        spend(open_[depth], w);
        other.take(i);
        push({oc, other.values[i] - w, w});
        word_.push_back(Token{w, false});
        if (feasible()) step();
        word_.pop_back();
        pop();
        other.put(i);
        refund(open_[depth], w);
        if (full()) return;
      }
    }
  }

  void accept() {
    TreeCode code;
    code.tokens = word_;
    const WeightedTree tree = tree_from_code(code);
    int aut = 1;
    for (int e = 1; e < tree.edge_count(); ++e) {
      if (tree.weight(e) != w0_) continue;
      const int cmp = compare_rooted_code(tree, e, word_);
      if (cmp < 0) return;
      if (cmp == 0) ++aut;
    }
    found_.push_back({std::move(code), aut});
  }

  std::size_t limit_;
  std::vector<Multiset> side_;
  std::vector<Open> open_;
  std::vector<Token> word_;
  Weight w0_ = 1;
  Weight open_residual_[2] = {0, 0};
  int open_positive_ = 0;
  std::vector<TreeClass> found_;
};

bool by_code(const TreeClass& a, const TreeClass& b) { return a.code < b.code; }

}  // namespace

std::vector<TreeClass> enumerate_classes(const Passport& passport, const EnumerationOptions& options) {
  if (passport.r() < 0) return {};
  Search probe(passport, options.limit);
  const std::vector<Task> tasks = probe.tasks();
  std::vector<TreeClass> out;
  const int jobs = options.limit > 0 ? 1 : std::max(1, std::min<int>(options.jobs, static_cast<int>(tasks.size())));
  if (jobs <= 1) {
    for (const Task& t : tasks) {
      probe.run(t);
      if (probe.full()) break;
    }
    out = std::move(probe.found());
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::vector<TreeClass>> partial(static_cast<std::size_t>(jobs));
    std::vector<std::thread> workers;
    for (int j = 0; j < jobs; ++j) {
      workers.emplace_back([&, j] {
        Search local(passport, 0);
        for (std::size_t k = next++; k < tasks.size(); k = next++) local.run(tasks[k]);
        partial[static_cast<std::size_t>(j)] = std::move(local.found());
      });
    }
    for (auto& w : workers) w.join();
    for (auto& p : partial) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  }
  std::sort(out.begin(), out.end(), by_code);
  return out;
}

std::vector<WeightedTree> enumerate_passport(const Passport& passport, const EnumerationOptions& options) {
  std::vector<WeightedTree> trees;
  for (const TreeClass& c : enumerate_classes(passport, options)) trees.push_back(tree_from_code(c.code));
  return trees;
}

std::size_t count_classes(const Passport& passport, std::size_t limit) {
  EnumerationOptions options;
  options.limit = limit;
  return enumerate_classes(passport, options).size();
}

std::vector<TreeClass> enumerate_weight(Weight n, const EnumerationOptions& options) {
  std::vector<TreeClass> out;
  for (const Passport& p : passports_of_weight(n)) {
    auto part = enumerate_classes(p, options);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  std::sort(out.begin(), out.end(), by_code);
  return out;
}

}  // namespace dessinum
