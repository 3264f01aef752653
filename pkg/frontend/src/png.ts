/**
 * Minimal deterministic PNG writer: 8-bit RGB, no interlace, filter 0 on
 * every scanline, zlib via node at a fixed compression level.
 */
import * as zlib from 'zlib';

const CRC_TABLE = (() => {
    const table = new Uint32Array(256);
    for (let n = 0; n < 256; n++) {
        let c = n;
        for (let k = 0; k < 8; k++) {
            c = c & 1 ? 0xedb88320 ^ (c >>> 1) : c >>> 1;
        }
        table[n] = c >>> 0;
    }
    return table;
})();

export function crc32(data: Uint8Array): number {
    let crc = 0xffffffff;
    for (let i = 0; i < data.length; i++) {
        crc = CRC_TABLE[(crc ^ data[i]) & 0xff] ^ (crc >>> 8);
    }
    return (crc ^ 0xffffffff) >>> 0;
}

function chunk(type: string, payload: Uint8Array): Buffer {
    const out = Buffer.alloc(12 + payload.length);
    out.writeUInt32BE(payload.length, 0);
    out.write(type, 4, 'ascii');
    Buffer.from(payload).copy(out, 8);
    const body = out.subarray(4, 8 + payload.length);
    out.writeUInt32BE(crc32(body), 8 + payload.length);
    return out;
}

/** Encode an RGB pixel buffer (width*height*3 bytes, row-major) as PNG. */
export function encodePng(pixels: Uint8Array, width: number, height: number): Buffer {
    if (pixels.length !== width * height * 3) {
        throw new Error(`pixel buffer is ${pixels.length} bytes, expected ${width * height * 3}`);
    }
    const ihdr = Buffer.alloc(13);
    ihdr.writeUInt32BE(width, 0);
    ihdr.writeUInt32BE(height, 4);
    ihdr[8] = 8;  // bit depth
    ihdr[9] = 2;  // color type: truecolor
    ihdr[10] = 0; // compression
    ihdr[11] = 0; // filter
    ihdr[12] = 0; // interlace

    // one filter byte (0 = None) per scanline
    const raw = Buffer.alloc(height * (1 + width * 3));
    for (let y = 0; y < height; y++) {
        const rowStart = y * (1 + width * 3);
        raw[rowStart] = 0;
        Buffer.from(pixels.subarray(y * width * 3, (y + 1) * width * 3))
            .copy(raw, rowStart + 1);
    }
    const idat = zlib.deflateSync(raw, { level: 6 });

    return Buffer.concat([
        Buffer.from([0x89, 0x50, 0x4e, 0x47, 0x0d, 0x0a, 0x1a, 0x0a]),
        chunk('IHDR', ihdr),
        chunk('IDAT', idat),
        chunk('IEND', new Uint8Array(0)),
    ]);
}

/** Read (width, height) back from an encoded PNG's IHDR. */
export function pngDimensions(png: Buffer): { width: number; height: number } {
    return { width: png.readUInt32BE(16), height: png.readUInt32BE(20) };
}
