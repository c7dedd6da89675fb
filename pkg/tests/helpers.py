"""Shared test helpers: seeded random rule networks for property tests."""

from __future__ import annotations

import random

from qrbs.ruledsl import And, Expr, FactRef, Not, Or, Rule, RuleSet


def _random_expr(
    rng: random.Random, available: list[str], leaves: int, allow_not: bool
) -> tuple[Expr, int]:
    """Random premise tree with the given leaf count; returns (expr, ancillas)."""
    if leaves == 1:
        expr: Expr = FactRef(rng.choice(available))
        cost = 0
    else:
        split = rng.randint(1, leaves - 1)
        left, cost_left = _random_expr(rng, available, split, allow_not)
        right, cost_right = _random_expr(rng, available, leaves - split, allow_not)
        node = And if rng.random() < 0.5 else Or
        expr = node(left, right)
        cost = cost_left + cost_right + 1
    if allow_not and rng.random() < 0.15:
        expr = Not(expr)
        cost += 1
    return expr, cost


def random_ruleset(
    seed: int,
    max_facts: int = 8,
    max_rules: int = 6,
    allow_not: bool = True,
    max_qubits: int = 14,
) -> RuleSet:
    """Random acyclic network, sized to keep compiled circuits small."""
    rng = random.Random(seed)
    n_facts = rng.randint(1, max_facts)
    facts = {f"F{i}": round(rng.uniform(0.0, 100.0), 3) for i in range(n_facts)}
    available = list(facts)
    ancilla_budget = max_qubits - n_facts

    rules: list[Rule] = []
    for r in range(rng.randint(0, max_rules)):
        expr, cost = _random_expr(rng, available, rng.randint(1, 3), allow_not)
        if cost > ancilla_budget:
            break
        ancilla_budget -= cost
        conclusion = f"C{r}"
        rules.append(Rule(f"R{r}", expr, conclusion))
        available.append(conclusion)

    if rules:
        goal = rng.choice([rule.conclusion for rule in rules])
    else:
        goal = rng.choice(available)
    return RuleSet(facts, tuple(rules), goal)
