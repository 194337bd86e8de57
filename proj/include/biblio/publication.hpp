#ifndef BIBLIO_PUBLICATION_HPP
#define BIBLIO_PUBLICATION_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace biblio {

struct Author {
    std::string name;
    std::optional<std::string> affiliation;

    bool operator==(const Author&) const = default;
};

// One bibliographic record as consumed by the pipeline.
struct Publication {
    std::string id;
    std::string title;
    std::string source;
    std::vector<Author> authors;
    std::vector<std::string> references;
    int year = 0;

    bool operator==(const Publication&) const = default;
};

constexpr int kMinYear = 1500;
constexpr int kMaxYear = 2200;

// std::map keeps iteration ascending by id, which every serialized
// output relies on for determinism.
struct Corpus {
    std::map<std::string, Publication> publications;
    std::string provenance;

    std::size_t size() const { return publications.size(); }
    bool contains(const std::string& id) const { return publications.count(id) != 0; }
    const Publication* find(const std::string& id) const {
        auto it = publications.find(id);
        return it == publications.end() ? nullptr : &it->second;
    }

    bool operator==(const Corpus& other) const {
        return publications == other.publications;
    }
};

// Per-applicant cardinalities: publication record, seed record,
// specialty approximation.
struct KeyFigures {
    std::string applicant_label;
    std::string domain_label;
    std::size_t pr_count = 0;
    std::size_t sr_count = 0;
    std::size_t sa_count = 0;
};

struct Warning {
    std::string id;
    std::string message;
};

class CorpusError : public std::runtime_error {
  public:
    explicit CorpusError(const std::string& what) : std::runtime_error(what) {}
};

class DuplicateIdError : public CorpusError {
  public:
    explicit DuplicateIdError(const std::string& id)
        : CorpusError("duplicate id: " + id), id_(id) {}
    const std::string& id() const { return id_; }

  private:
    std::string id_;
};

class MalformedRecordError : public CorpusError {
  public:
    MalformedRecordError(std::size_t index, const std::string& reason)
        : CorpusError("record " + std::to_string(index) + ": " + reason),
          index_(index) {}
    std::size_t index() const { return index_; }

  private:
    std::size_t index_;
};

class MissingFieldError : public CorpusError {
  public:
    MissingFieldError(const std::string& id, const std::string& field)
        : CorpusError("record '" + id + "': missing field '" + field + "'"),
          field_(field) {}
    const std::string& field() const { return field_; }

  private:
    std::string field_;
};

}  // namespace biblio

#endif  // BIBLIO_PUBLICATION_HPP
