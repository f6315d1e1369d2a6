"""Evaluation gallery: confusion matrices, ROC curves, and model comparison.

No model needed — synthetic classifiers with controlled skill levels show how
the metrics behave. Figures and the comparison report land in
demos/output/03/.
"""

from pathlib import Path
from types import SimpleNamespace

import numpy as np

from rosebreeds import evaluation

OUT = Path(__file__).parent / "output" / "03"
CLASSES = ("crimson", "ivory", "gold", "rose", "scarlet")


def synthetic_scores(rng, n, skill):
    """Score rows that put `skill` extra mass on the true class."""
    y_true = rng.integers(0, len(CLASSES), n)
    scores = rng.random((n, len(CLASSES))) + 1e-9
    scores[np.arange(n), y_true] += skill
    return y_true, scores / scores.sum(axis=1, keepdims=True)


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    rng = np.random.default_rng(7)

    # ------------------------------------------------------------------
    # 1. One model: confusion matrix + accuracy/loss. The matrix rows are
    #    true classes, columns predictions; the trace over the total is the
    #    accuracy identity.
    # ------------------------------------------------------------------
    y_true, scores = synthetic_scores(rng, 400, skill=0.55)
    confusion = evaluation.confusion_matrix(y_true, scores.argmax(axis=1), CLASSES)
    accuracy, loss = evaluation.accuracy_and_loss(y_true, scores)
    print("confusion counts:")
    print(confusion.counts)
    print(f"accuracy {accuracy:.3f} (= trace/total {confusion.accuracy:.3f}), "
          f"cross-entropy {loss:.3f}")

    # ------------------------------------------------------------------
    # 2. ROC curves: one-vs-rest per class plus the micro-average. AUC 0.5 is
    #    chance, 1.0 is a perfect ranking.
    # ------------------------------------------------------------------
    curves = evaluation.roc_curves(y_true, scores, CLASSES)
    curves.append(evaluation.micro_roc(y_true, scores))
    for curve in curves:
        print(f"AUC {curve.class_label.name:>12}: {curve.auc:.4f}")

    # ------------------------------------------------------------------
    # 3. Comparing models: three skill levels, one report. The report picks
    #    the best row by test accuracy (loss breaks ties) and renders CSV,
    #    HTML, and per-model figures.
    # ------------------------------------------------------------------
    entries, confusions, curve_map = [], {}, {}
    for name, skill in (("weak", 0.3), ("decent", 0.9), ("strong", 2.0)):
        y, s = synthetic_scores(rng, 400, skill)
        acc, lo = evaluation.accuracy_and_loss(y, s)
        history = SimpleNamespace(train_accuracy=[acc], train_loss=[lo])
        entries.append((name, history, (acc, lo)))
        confusions[name] = evaluation.confusion_matrix(y, s.argmax(axis=1), CLASSES)
        curve_map[name] = evaluation.roc_curves(y, s, CLASSES)

    report = evaluation.compare_models(entries)
    files = evaluation.render_report(report, confusions, curve_map, OUT)
    print(f"\nbest model: {report.best_row().model}")
    for path in files:
        print("wrote", path)


if __name__ == "__main__":
    main()
