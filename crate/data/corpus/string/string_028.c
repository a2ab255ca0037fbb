// count vowels
int main()
{
    char buf[1000], c;
    int v = 0, idx = 0;
    gets(buf);
    for (; buf[idx]; idx++) {
        c = tolower(buf[idx]);
        if (c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u')
            v++;
    }
    printf("%d\n", v);
    return 0;
}
