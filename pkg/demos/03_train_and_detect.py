"""
Training a change detector and reading its predictions
======================================================

Runs the full loop at desk scale: generate a handful of change pairs,
train the dual-image detector for a few epochs on CPU, then decode
box predictions for a pair it trained on. The run directory holds
checkpoints plus an append-only metrics log; everything is seeded, so
rerunning this script reproduces the same losses.
"""
import json
import os

import numpy as np

from cyws.datagen import (
    AnnotatedImage,
    AugmentationSpec,
    GenerationConfig,
    generate_dataset,
    load_pair_image,
    load_pairs_index,
)
from cyws.harness import (
    TrainConfig,
    detections_from_json,
    load_model,
    predict_images,
    render_predictions,
    save_image_chw,
    train,
)
from cyws.geometry import Bbox

here = os.path.dirname(__file__)
data_root = os.path.join(here, "output", "train_demo_data")
run_dir = os.path.join(here, "output", "train_demo_run")

# --- Data: three scenes, one inpainted variant each --------------------------
rng = np.random.default_rng(1)
corpus = []
for i in range(3):
    image = np.full((3, 96, 96), 90, dtype=np.uint8)
    masks = {}
    for k, color in enumerate([(230, 60, 60), (60, 230, 60), (60, 60, 230)]):
        y, x = int(rng.integers(6, 58)), int(k * 32 + rng.integers(0, 10))
        mask = np.zeros((96, 96), dtype=bool)
        mask[y : y + 18, x : x + 18] = True
        for c in range(3):
            image[c][mask] = color[c]
        masks[f"block{k}"] = mask
    corpus.append(AnnotatedImage.from_masks(f"scene{i}", image, masks))

config = GenerationConfig(
    output_dir=data_root,
    num_variants=1,
    paste_probability=0.0,
    val_fraction=0.34,
    augmentation=AugmentationSpec(
        scale_range=(0.98, 1.02),
        translation_range=(-0.02, 0.02),
        rotation_range=(-0.05, 0.05),
        target_size=128,
    ),
)
report = generate_dataset(corpus, config, seed=2)
print(f"generated {report.num_pairs} pairs ({report.num_train} train / {report.num_val} val)")

# --- Train: small backbone, 128px inputs, strictly CPU -----------------------
train_config = TrainConfig(
    seed=0,
    epochs=6,
    batch_size=2,
    lr=1e-3,
    backbone="resnet18",
    pretrained=False,
    output_stride=4,
    input_size=128,
    cache_data=True,
)
train_records = load_pairs_index(os.path.join(data_root, "train.jsonl"))
val_records = load_pairs_index(os.path.join(data_root, "val.jsonl"))
result = train(train_config, train_records, val_records, data_root, run_dir)
print(f"best validation loss {result.best_val_loss:.3f} at epoch {result.best_epoch}")

# --- The metrics log is one JSON record per epoch -----------------------------
with open(result.metrics_path) as fh:
    for line in fh:
        record = json.loads(line)
        print(
            f"  epoch {record['epoch']}: train {record['train_loss']:.3f}"
            f"  val {record['val_loss']:.3f}"
        )

# --- Predict on one training pair ---------------------------------------------
model, model_config = load_model(result.best_checkpoint)
rec = train_records[0]
image1 = load_pair_image(os.path.join(data_root, rec["image1"]))
image2 = load_pair_image(os.path.join(data_root, rec["image2"]))
pred = predict_images(model, model_config, image1, image2)
top = pred["image1"][0]
print(f"top detection in image 1: box {np.round(top['bbox'], 1)} score {top['score']:.3f}")

# --- Render: solid predicted boxes, dashed ground truth -----------------------
composite = render_predictions(
    image1,
    image2,
    detections_from_json(pred["image1"]),
    detections_from_json(pred["image2"]),
    ground_truth1=[Bbox(*b) for b in rec["boxes1"]],
    ground_truth2=[Bbox(*b) for b in rec["boxes2"]],
    k=3,
)
out_png = os.path.join(here, "output", "detections.png")
save_image_chw(out_png, composite)
print("wrote", out_png)
