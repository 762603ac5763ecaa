"""
Where does the network look? Attention heatmaps for image queries
=================================================================

Takes the checkpoint produced by 03_train_and_detect.py (run that
first) and asks: for a region of image 1, where does the finest
cross-attention scale place its mass over image 2? The answer comes
back as a grid over image-2 cells, an upsampled grayscale heatmap, and
a side-by-side composite with the query box drawn on image 1.
"""
import os

from cyws.datagen import load_pair_image, load_pairs_index
from cyws.harness import heatmap_entropy, load_model, save_image_chw, visualize_attention

import cv2

here = os.path.dirname(__file__)
data_root = os.path.join(here, "output", "train_demo_data")
run_dir = os.path.join(here, "output", "train_demo_run")
checkpoint = os.path.join(run_dir, "best.pt")
if not os.path.exists(checkpoint):
    raise SystemExit("run demos/03_train_and_detect.py first to produce a checkpoint")

model, config = load_model(checkpoint)
records = load_pairs_index(os.path.join(data_root, "pairs.jsonl"))
rec = records[0]
image1 = load_pair_image(os.path.join(data_root, rec["image1"]))
image2 = load_pair_image(os.path.join(data_root, rec["image2"]))

# --- Query the region around the first ground-truth box ----------------------
x1, y1, x2, y2 = rec["boxes1"][0]
query = f"{x1:.0f},{y1:.0f},{x2:.0f},{y2:.0f}"
result = visualize_attention(model, config, image1, image2, query)
print("query:", query)
print("attention grid over image-2 cells:", result.grid.shape)
print(f"grid max {result.grid.max():.4f} at cell",
      tuple(int(v) for v in divmod(result.grid.argmax(), result.grid.shape[1])))

# --- Entropy separates focused from diffuse attention -------------------------
# A uniform map over n cells has entropy log(n); sharp correspondence
# scores far below that ceiling.
import math

cells = result.grid.size
print(f"entropy {heatmap_entropy(result.grid):.3f} nats (uniform would be {math.log(cells):.3f})")

# --- Full-frame query for comparison -------------------------------------------
wide = visualize_attention(model, config, image1, image2, "full")
print(f"full-frame query entropy {heatmap_entropy(wide.grid):.3f} nats")

# --- Save the artifacts ----------------------------------------------------------
heat_png = os.path.join(here, "output", "attention_heat.png")
overlay_png = os.path.join(here, "output", "attention_overlay.png")
cv2.imwrite(heat_png, result.heatmap)
save_image_chw(overlay_png, result.composite)
print("wrote", heat_png)
print("wrote", overlay_png)
