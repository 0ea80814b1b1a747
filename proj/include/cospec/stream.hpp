#pragma once

#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "cospec/enumerate.hpp"
#include "cospec/graph.hpp"
#include "cospec/graph6.hpp"

namespace cospec {

/// Raised for bad records in a stream; carries the 1-based record number.
class StreamError : public std::runtime_error {
 public:
  StreamError(std::size_t record, const std::string& what)
      : std::runtime_error("record " + std::to_string(record) + ": " + what), record_(record) {}
  std::size_t record() const { return record_; }

 private:
  std::size_t record_;
};

/// Source of graphs for a census: the built-in connected or tree enumerator,
/// or a graph6 file (one record per isomorphism class). Every emitted graph
/// is checked to be connected and to have the declared order.
class GraphStream {
 public:
  enum class Source { connected, trees, file };
  using Visitor = std::function<void(const Graph&, std::size_t record)>;

  static GraphStream connected(int n) {
    GraphStream s(Source::connected, n);
    s.codes_ = std::make_shared<std::vector<std::string>>(connected_graph6_codes(n));
    return s;
  }

  static GraphStream trees(int n) {
    FreeTreeGenerator probe(n);  // validates n
    return GraphStream(Source::trees, n);
  }

  /// `path` of "-" reads standard input, which can be traversed only once.
  /// n = 0 accepts any order.
  static GraphStream file(std::string path, int n = 0) {
    GraphStream s(Source::file, n);
    s.path_ = std::move(path);
    return s;
  }

  /// Wraps an explicit list of graphs (used by tests and shuffled replays).
  static GraphStream from_graphs(std::vector<Graph> graphs, int n = 0) {
    GraphStream s(Source::file, n);
    s.graphs_ = std::make_shared<std::vector<Graph>>(std::move(graphs));
    return s;
  }

  Source source() const { return source_; }
  /// Declared order, or the order of the first emitted graph when none was declared.
  int order() const { return n_ != 0 ? n_ : seen_order_; }
  std::size_t emitted() const { return emitted_; }
  std::size_t padding_warnings() const { return padding_warnings_; }
  bool rewindable() const { return !(source_ == Source::file && !graphs_ && path_ == "-"); }

  std::string description() const {
    switch (source_) {
      case Source::connected: return "generate:connected:" + std::to_string(n_);
      case Source::trees: return "generate:trees:" + std::to_string(n_);
      case Source::file: return graphs_ ? "memory" : "file:" + path_;
    }
    return "";
  }

  /// Visits every graph in order. Rewindable sources may be traversed again.
  void for_each(const Visitor& visit) {
    if (consumed_ && !rewindable()) throw std::logic_error("standard input stream cannot be traversed twice");
    consumed_ = true;
    emitted_ = 0;
    auto emit = [&](const Graph& g) {
      if (++emitted_ == 1) seen_order_ = g.order();
      if (n_ != 0 && g.order() != n_)
        throw StreamError(emitted_, "expected " + std::to_string(n_) + " vertices, found " +
                                        std::to_string(g.order()));
      if (!is_connected(g)) throw StreamError(emitted_, "disconnected graph " + write_graph6(g));
      visit(g, emitted_);
    };
    switch (source_) {
      case Source::connected:
        for (const auto& code : *codes_) emit(parse_graph6(code));
        return;
      case Source::trees: {
        FreeTreeGenerator gen(n_);
        std::vector<int> levels;
        while (gen.next(levels)) emit(FreeTreeGenerator::to_graph(levels));
        return;
      }
      case Source::file: {
        if (graphs_) {
          for (const auto& g : *graphs_) emit(g);
          return;
        }
        std::ifstream file;
        std::istream* in = &std::cin;
        if (path_ != "-") {
          file.open(path_);
          if (!file) throw std::runtime_error("cannot open " + path_);
          in = &file;
        }
        Graph6Reader reader(*in);
        for (;;) {
          std::optional<Graph> g;
          try {
            g = reader.next();
          } catch (const Graph6Error& e) {
            throw StreamError(reader.records(), e.what());
          }
          if (!g) break;
          emit(*g);
        }
        padding_warnings_ = reader.padding_warnings();
        return;
      }
    }
  }

  std::vector<Graph> collect() {
    std::vector<Graph> out;
    for_each([&](const Graph& g, std::size_t) { out.push_back(g); });
    return out;
  }

 private:
  GraphStream(Source s, int n) : source_(s), n_(n) {}

  Source source_;
  int n_;
  int seen_order_ = 0;
  std::string path_;
  std::shared_ptr<std::vector<std::string>> codes_;
  std::shared_ptr<std::vector<Graph>> graphs_;
  std::size_t emitted_ = 0;
  std::size_t padding_warnings_ = 0;
  bool consumed_ = false;
};

}  // namespace cospec
