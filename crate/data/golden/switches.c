int classify(int c)
{
    int r = 0;
    switch (c) {
        r = -1;
    case 0:
    case 1:
        r = 1;
        break;
    case 2: {
        r = 2;
        break;
    }
    default:
    case 3:
        r = 3;
        r++;
    }
    switch (r)
        case 1: r = 10;
    return r;
}
