/**
 * Rasterizes a prepared figure into a PNG file: one panel per input CSV,
 * stacked vertically, with axes, 1/2/5 ticks, and an optional +/- band
 * overlay. Output is deterministic for identical inputs and size.
 */
import * as fs from 'fs';

import { readTrajectoryCsv } from './csv';
import { FigureData, FigureSpec, Panel, prepareFigure, tickLabel, ticks } from './figure';
import { encodePng } from './png';
import { BLACK, BLUE, Canvas, Color, GREY, ORANGE, RED, TEXT_HEIGHT, textWidth } from './raster';

const SERIES_COLORS: Color[] = [BLUE, ORANGE];

const MARGIN_LEFT = 72;
const MARGIN_RIGHT = 16;
const MARGIN_TOP = 24;
const MARGIN_BOTTOM = 40;

export interface RenderResult {
    data: FigureData;
    png: Buffer;
    width: number;
    height: number;
}

function panelRange(panel: Panel, band: number | null): { lo: number; hi: number } {
    let lo = Infinity;
    let hi = -Infinity;
    for (const v of panel.y) {
        if (v < lo) lo = v;
        if (v > hi) hi = v;
    }
    if (band !== null) {
        lo = Math.min(lo, -band);
        hi = Math.max(hi, band);
    }
    if (!(hi > lo)) {
        lo -= 1;
        hi += 1;
    }
    const pad = 0.05 * (hi - lo);
    return { lo: lo - pad, hi: hi + pad };
}

function drawPanel(
    canvas: Canvas, panel: Panel, band: number | null,
    top: number, panelHeight: number, color: Color,
    xLabel: string, yLabel: string, lastPanel: boolean,
): void {
    const plotLeft = MARGIN_LEFT;
    const plotRight = canvas.width - MARGIN_RIGHT;
    const plotTop = top + MARGIN_TOP;
    const plotBottom = top + panelHeight - MARGIN_BOTTOM;
    const plotW = plotRight - plotLeft;
    const plotH = plotBottom - plotTop;

    const x0 = panel.x[0];
    const x1 = panel.x[panel.x.length - 1];
    const { lo, hi } = panelRange(panel, band);
    const px = (x: number) => plotLeft + ((x - x0) / (x1 - x0 || 1)) * plotW;
    const py = (y: number) => plotBottom - ((y - lo) / (hi - lo)) * plotH;

    canvas.text(plotLeft, top + 8, panel.title, BLACK);
    canvas.text(plotLeft - 64, plotTop - 12, yLabel, BLACK);

    for (const tx of ticks(x0, x1)) {
        const gx = Math.round(px(tx));
        canvas.line(gx, plotTop, gx, plotBottom, GREY);
        if (lastPanel) {
            const label = tickLabel(tx);
            canvas.text(gx - textWidth(label) / 2, plotBottom + 6, label, BLACK);
        }
    }
    for (const ty of ticks(lo, hi)) {
        const gy = Math.round(py(ty));
        canvas.line(plotLeft, gy, plotRight, gy, GREY);
        const label = tickLabel(ty);
        canvas.text(plotLeft - 6 - textWidth(label), gy - Math.floor(TEXT_HEIGHT / 2), label, BLACK);
    }

    if (band !== null) {
        canvas.line(plotLeft, Math.round(py(band)), plotRight, Math.round(py(band)), RED);
        canvas.line(plotLeft, Math.round(py(-band)), plotRight, Math.round(py(-band)), RED);
    }

    for (let i = 1; i < panel.x.length; i++) {
        canvas.line(px(panel.x[i - 1]), py(panel.y[i - 1]), px(panel.x[i]), py(panel.y[i]), color);
    }

    canvas.rect(plotLeft, plotTop, plotRight, plotBottom, BLACK);
    if (lastPanel) {
        canvas.text(
            plotLeft + plotW / 2 - textWidth(xLabel) / 2,
            plotBottom + 6 + TEXT_HEIGHT + 4, xLabel, BLACK);
    }
}

/** Render a figure spec to PNG bytes (pure given loaded trajectories). */
export function renderFigure(spec: FigureSpec, data: FigureData): RenderResult {
    const width = spec.width ?? 960;
    const panelHeight = spec.panelHeight ?? 300;
    const height = panelHeight * data.panels.length;
    const canvas = new Canvas(width, height);
    data.panels.forEach((panel, i) => {
        drawPanel(
            canvas, panel, data.band, i * panelHeight, panelHeight,
            SERIES_COLORS[i % SERIES_COLORS.length], data.xLabel, data.yLabel,
            i === data.panels.length - 1,
        );
    });
    return { data, png: encodePng(canvas.pixels, width, height), width, height };
}

/** Load CSVs, render, and write the image file. */
export function render(spec: FigureSpec): RenderResult {
    const trajectories = spec.csvPaths.map(readTrajectoryCsv);
    const data = prepareFigure(spec, trajectories);
    const result = renderFigure(spec, data);
    fs.writeFileSync(spec.outPath, result.png);
    return result;
}
