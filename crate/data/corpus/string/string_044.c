int main()
{
    char buf[1000], ch;
    int cnt = 0, i = 0;
    gets(buf);
    for (; buf[i]; i++) {
        ch = tolower(buf[i]);
        if (ch == 'a' || ch == 'e' || ch == 'i' || ch == 'o' || ch == 'u')
            cnt++;
    }
    printf("%d\n", cnt);
    return 0;
}
