#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bic/scheme.hpp"

namespace bic {

/// The three decode requirements, keyed by how many of a receiver's
/// subcarriers are interfered. Required message sets are nested:
/// {wm} subset {wl, wm} subset {w0, wl, wm}.
enum class DecodeClass { all_interfered, exactly_l, interference_free };

const char* decode_class_name(DecodeClass c);
std::vector<MsgClass> required_messages(DecodeClass c);

/// Builds the stacked linear maps seen by one receiver under `cfg`:
/// A_dec takes the decode class's required own-message symbols to the
/// received block (all M subcarriers, T slots); A_other stacks the own
/// messages outside the required set plus the other user's entire message
/// through the cross links of interfered subcarriers. `as_user2` swaps the
/// encoder roles for asymmetric schemes.
std::pair<Matrix, Matrix> assemble_maps(const LinearScheme& s, const ReceiverConfig& cfg,
                                        DecodeClass cls, bool as_user2 = false);

struct VerifyEntry {
  DecodeClass cls;
  ReceiverConfig cfg;
  unsigned user = 1;  // which receiver's decoding was checked
  unsigned rank_dec = 0;
  unsigned rank_other = 0;
  unsigned rank_joint = 0;
  unsigned dec_cols = 0;
  bool pass = false;
};

struct VerifyReport {
  std::vector<VerifyEntry> entries;
  bool overall = false;

  /// One line per class/mask: mask bits, ranks, PASS/FAIL.
  std::string to_text() const;
};

/// Exact unique-decodability of every decode class over all receiver
/// configurations it quantifies over: the all-interfered mask for wm, every
/// mask with exactly L interfered subcarriers for {wl, wm}, and the
/// all-free mask for the full set. Asymmetric schemes are checked from both
/// receivers. Failures are report entries, not errors.
VerifyReport verify(const LinearScheme& s);

}  // namespace bic
