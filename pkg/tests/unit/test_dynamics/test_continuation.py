"""Tests for branch continuation."""

from __future__ import annotations

import numpy as np
import pytest

from bell_switch.dynamics import (
    assignment_scores,
    branch_continue,
    choose_assignment,
    continue_labels,
    proximity_scores,
    swap_mask,
)
from bell_switch.errors import AmbiguousAssignmentError
from bell_switch.model import ParameterPoint, eigensystem


class TestBranchContinue:
    """Tests for branch_continue."""

    def test_keeps_labels_for_small_step(self) -> None:
        """Test a nearby point keeps its labels."""
        previous = eigensystem(ParameterPoint(g=0.1, gamma=0.05, kappa=-0.05))
        current = branch_continue(previous, eigensystem(ParameterPoint(g=0.1001, gamma=0.05, kappa=-0.05)))

        assert current.value_plus == pytest.approx(previous.value_plus, abs=1e-3)

    def test_undoes_swap(self) -> None:
        """Test exchanged raw labels are exchanged back."""
        previous = eigensystem(ParameterPoint(g=0.1, gamma=0.05, kappa=-0.05))
        raw = eigensystem(ParameterPoint(g=0.1001, gamma=0.05, kappa=-0.05)).swapped()

        current = branch_continue(previous, raw)

        assert current.value_plus == raw.value_minus

    def test_phases_are_real_positive(self) -> None:
        """Test overlaps with the previous labels are real and positive."""
        previous = eigensystem(ParameterPoint(delta=0.01, g=0.1, gamma=0.05, kappa=-0.05))
        raw = eigensystem(ParameterPoint(delta=0.011, g=0.1, gamma=0.05, kappa=-0.05)).rephased(1j, -1j)

        current = branch_continue(previous, raw)

        for label in ("plus", "minus"):
            ov = complex(previous.left(label) @ current.right(label))
            assert ov.real > 0
            assert ov.imag == pytest.approx(0.0, abs=1e-12)

    def test_ambiguous(self) -> None:
        """Test a tie between two near-degenerate systems is refused."""
        previous = eigensystem(ParameterPoint(g=1e-9))
        current = eigensystem(ParameterPoint(delta=2e-9))

        with pytest.raises(AmbiguousAssignmentError) as exc_info:
            branch_continue(previous, current)

        assert exc_info.value.score_keep == pytest.approx(exc_info.value.score_swap)
        assert exc_info.value.exit_code == 4


class TestChooseAssignment:
    """Tests for the tie fallbacks of choose_assignment."""

    def test_overlap_decides(self) -> None:
        """Test distinct overlap scores decide on their own."""
        previous = eigensystem(ParameterPoint(g=0.1, gamma=0.05, kappa=-0.05))
        raw = eigensystem(ParameterPoint(g=0.1001, gamma=0.05, kappa=-0.05)).swapped()

        decision = choose_assignment(previous, raw)

        assert decision.rule == "overlap"
        assert decision.swap

    def test_overlap_tie_uses_proximity(self) -> None:
        """Test Bell-state against basis-state eigenvectors fall back to eigenvalue distance."""
        previous = eigensystem(ParameterPoint(g=0.1))
        raw = eigensystem(ParameterPoint(delta=0.1))

        decision = choose_assignment(previous, raw)
        current = branch_continue(previous, raw)

        assert decision.rule == "proximity"
        assert decision.score_keep == pytest.approx(decision.score_swap)
        assert not decision.swap
        assert current.value_plus == pytest.approx(1.0)
        assert proximity_scores(previous, raw) == pytest.approx((0.1, 0.3))

    def test_full_tie_holds_principal_labels(self) -> None:
        """Test a real gap against an imaginary gap of equal size keeps the labelling."""
        previous = eigensystem(ParameterPoint(g=0.1))
        raw = eigensystem(ParameterPoint(gamma=0.2, kappa=-0.2))

        decision = choose_assignment(previous, raw)

        assert decision.rule == "held"
        assert not decision.swap
        assert choose_assignment(previous, raw.swapped()).swap
        assert choose_assignment(previous.swapped(), raw).swap

    def test_continue_labels_reports_rule(self) -> None:
        """Test the decision is returned with the continued system."""
        previous = eigensystem(ParameterPoint(g=0.1))
        raw = eigensystem(ParameterPoint(gamma=0.2, kappa=-0.2))

        current, decision = continue_labels(previous, raw)

        assert decision.rule == "held"
        assert current.value_plus == pytest.approx(1.0 + 0.1j)

class TestSwapMask:
    """Tests for the vectorized assignment rule."""

    def test_matches_scalar_rule(self) -> None:
        """Test the mask agrees with assignment_scores pair by pair."""
        points = [
            (ParameterPoint(g=0.1, gamma=0.05, kappa=-0.05), ParameterPoint(g=0.1001, gamma=0.05, kappa=-0.05)),
            (ParameterPoint(delta=0.01, g=0.1), ParameterPoint(delta=-0.01, g=0.1)),
        ]
        prev = [eigensystem(a) for a, _ in points]
        cur = [eigensystem(b) for _, b in points]
        cur[1] = cur[1].swapped()

        mask, diff = swap_mask(
            np.stack([p.lefts for p in prev]),
            np.stack([p.rights.T for p in prev]),
            np.stack([c.lefts for c in cur]),
            np.stack([c.rights.T for c in cur]),
        )

        for k in range(2):
            keep, swap = assignment_scores(prev[k], cur[k])
            assert mask[k] == (swap > keep)
            assert diff[k] == pytest.approx(abs(keep - swap))
        assert mask[1]
