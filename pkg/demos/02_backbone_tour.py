"""Backbone tour: build all four families and inspect their contracts.

Runs with random initialization so no weights download is needed; pass
pretrained_source="imagenet" to BackboneSpec when you are online. Expect a
minute or two of graph building on a laptop CPU.
"""

import numpy as np

from rosebreeds.models import FAMILIES, BackboneSpec, build_classifier


def main():
    rng = np.random.default_rng(0)
    rows = []
    for family in FAMILIES:
        # Every family accepts a configurable input size except vgg16, whose
        # published classifier head is locked to 224x224.
        spec = BackboneSpec(
            family=family,
            input_size=None if family == "vgg16" else (96, 96),
            pretrained_source=None,  # offline: random init
        )
        classifier = build_classifier(spec, num_classes=5, head_seed=0)
        info = classifier.describe()

        # The forward contract: a float batch in, one probability row per
        # image out, each row summing to 1.
        h, w = classifier.input_size
        probs = classifier.forward(rng.random((2, h, w, 3)).astype(np.float32))
        rows.append((
            family,
            f"{h}x{w}",
            f"{info['total_parameter_count']:,}",
            f"{info['trainable_parameter_count']:,}",
            str(info["conv_layer_count"]),
            f"{probs.sum(axis=1).min():.6f}..{probs.sum(axis=1).max():.6f}",
        ))

    header = ("family", "input", "params", "trainable", "conv layers", "softmax sums")
    widths = [max(len(r[i]) for r in rows + [header]) for i in range(len(header))]
    for row in [header] + rows:
        print("  ".join(cell.ljust(width) for cell, width in zip(row, widths)))

    print()
    print("With the extractor frozen only the head learns: trainable counts")
    print("above are exactly feature_dim x classes + classes for every family.")


if __name__ == "__main__":
    main()
