"""End to end: corpus -> pipeline -> registry -> prediction with breed info.

The equivalent of `rosebreeds run --config ...` followed by what the HTTP
service does per request, all in-process. Uses a small synthetic corpus and a
frozen random-init backbone, so it runs offline in a couple of minutes.
Artifacts land in demos/output/04/.
"""

import json
from pathlib import Path

import numpy as np

from rosebreeds.breedbase import load_breedbase
from rosebreeds.dataset import load_image, preprocess_image, read_manifest
from rosebreeds.pipeline import run_pipeline
from rosebreeds.registry import load_artifact, newest_model
from rosebreeds.synthetic import build_corpus

OUT = Path(__file__).parent / "output" / "04"


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    corpus = OUT / "corpus"
    if not corpus.exists():
        build_corpus(corpus, counts=30, image_size=32, seed=2)

    # ------------------------------------------------------------------
    # 1. One config dict drives the whole pipeline: ingest, split, augment,
    #    build, train, evaluate, save. The same dict serializes to the JSON
    #    file the `run` CLI command takes.
    # ------------------------------------------------------------------
    config = {
        "data_root": str(corpus),
        "workspace": str(OUT / "workspace"),
        "augment": {"multiplier": 3, "rng_seed": 0},
        "model": {"family": "xception", "input_size": [96, 96],
                  "pretrained_source": None},
        "training": {"epochs": 6, "batch_size": 32, "learning_rate": 0.003},
    }
    (OUT / "pipeline.json").write_text(json.dumps(config, indent=2))
    summary = run_pipeline(config, progress=print)
    print(f"\ntest accuracy {summary['test_accuracy']:.3f}, "
          f"artifact {summary['model_id']}")

    # ------------------------------------------------------------------
    # 2. Load the artifact back the way the service does: checksum verified,
    #    fixture prediction replayed.
    # ------------------------------------------------------------------
    registry_dir = Path(summary["registry_dir"])
    artifact = load_artifact(registry_dir, newest_model(registry_dir).model_id)
    print("loaded", artifact.model_id, "labels:", list(artifact.labels))

    # ------------------------------------------------------------------
    # 3. Predict one held-out test image and attach the breed's care record —
    #    the in-process version of POST /api/v1/predict.
    # ------------------------------------------------------------------
    manifest = read_manifest(summary["manifest"])
    record = manifest.select(split="test")[0]
    batch = preprocess_image(
        load_image(record.path),
        artifact.preprocessing["input_size"],
        artifact.preprocessing["rescale_factor"],
    )[np.newaxis, ...]
    probs = artifact.classifier.forward(batch)[0]
    top = int(np.argmax(probs))
    breed = artifact.labels[top]
    truth = manifest.labels[record.label].name
    print(f"\ntest image {Path(record.path).name}: true {truth!r}, "
          f"predicted {breed!r} at {probs[top]:.2f}")

    info = load_breedbase().lookup(breed)
    print(f"{info.name}: {info.description}")
    for step in info.care_guidance:
        print(" care:", step)


if __name__ == "__main__":
    main()
