#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "birkhoff/matrix_io.hpp"

namespace birkhoff::cli {

/// Minimal ordered JSON emitter. Doubles go out with 17 significant digits
/// so that (command, seed) pairs produce byte-identical stdout.
class JsonWriter {
public:
    explicit JsonWriter(std::ostream& out) : out_(out) {}

    JsonWriter& begin_object() {
        separate();
        out_ << '{';
        fresh_.push_back(true);
        return *this;
    }
    JsonWriter& end_object() {
        out_ << '}';
        fresh_.pop_back();
        return *this;
    }
    JsonWriter& begin_array() {
        separate();
        out_ << '[';
        fresh_.push_back(true);
        return *this;
    }
    JsonWriter& end_array() {
        out_ << ']';
        fresh_.pop_back();
        return *this;
    }

    JsonWriter& key(const std::string& k) {
        separate();
        write_string(k);
        out_ << ':';
        pending_value_ = true;
        return *this;
    }

    JsonWriter& value(double v) {
        separate();
        out_ << format_double(v);
        return *this;
    }
    JsonWriter& value(long long v) {
        separate();
        out_ << v;
        return *this;
    }
    JsonWriter& value(std::size_t v) { return value(static_cast<long long>(v)); }
    JsonWriter& value(int v) { return value(static_cast<long long>(v)); }
    JsonWriter& value(bool v) {
        separate();
        out_ << (v ? "true" : "false");
        return *this;
    }
    JsonWriter& value(const std::string& v) {
        separate();
        write_string(v);
        return *this;
    }
    JsonWriter& value(const char* v) { return value(std::string(v)); }

    JsonWriter& value(const std::vector<int>& xs) {
        begin_array();
        for (int x : xs) value(x);
        return end_array();
    }
    JsonWriter& value(const std::vector<double>& xs) {
        begin_array();
        for (double x : xs) value(x);
        return end_array();
    }
    JsonWriter& value(const SquareMatrix& m) {
        begin_array();
        for (std::size_t i = 0; i < m.dim(); ++i) {
            begin_array();
            for (std::size_t j = 0; j < m.dim(); ++j) value(m(i, j));
            end_array();
        }
        return end_array();
    }

private:
    void separate() {
        if (pending_value_) {
            pending_value_ = false;
            return;
        }
        if (!fresh_.empty()) {
            if (!fresh_.back()) out_ << ',';
            fresh_.back() = false;
        }
    }

    void write_string(const std::string& s) {
        out_ << '"';
        for (char c : s) {
            switch (c) {
                case '"': out_ << "\\\""; break;
                case '\\': out_ << "\\\\"; break;
                case '\n': out_ << "\\n"; break;
                case '\t': out_ << "\\t"; break;
                default: out_ << c;
            }
        }
        out_ << '"';
    }

    std::ostream& out_;
    std::vector<bool> fresh_;
    bool pending_value_ = false;
};

}  // namespace birkhoff::cli
